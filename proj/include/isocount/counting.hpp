#pragma once
// The three counting pipelines:
//   census      - exact brute-force census over minimal (A,B) pairs
//   param_count - parametrized twist-family enumeration over t = a/b^m
//   stack_*     - section-tuple counts under the stacky height conditions
// All counts are exact; engines are deterministic and partitionable.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isocount::counting {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct CensusResult {
  unsigned N = 0;
  u64 X = 0;
  u64 count = 0;
  std::string engine;
  double elapsed = 0.0;  // seconds
};

// Census inner-loop detector, precomputed per (N, X).  Implements the same
// criterion as isogeny::has_isogeny (j-membership on the level-N fiber) via a
// precomputed set of reduced j-values; tests assert equality against
// has_isogeny on desk-scale sweeps.
class Detector {
 public:
  Detector(unsigned N, u64 X);
  // c = (A,B) assumed minimal and nonsingular
  bool operator()(i64 A, i64 B) const;
  unsigned level() const { return N_; }

 private:
  unsigned N_;
  u64 X_;
  bool direct_ = false;                       // N=5: per-pair Route A
  std::vector<std::pair<i64, i64>> jset_;     // sorted reduced (num, den), den>0
};

struct Partition {
  unsigned id;
  i64 a_lo, a_hi;  // inclusive A-range
};
std::vector<Partition> census_partitions(u64 X, unsigned pieces);
u64 census_partition_count(const Detector& det, u64 X, i64 a_lo, i64 a_hi);

// pieces: number of partitions (fixed by config, not by thread count, so that
// output is identical across thread counts).  done: partition ids already
// counted (resume); on_partition: called in partition-id order as counts
// complete (checkpoint hook).
CensusResult census(unsigned N, u64 X, unsigned threads = 1, unsigned pieces = 16,
                    const std::vector<std::pair<unsigned, u64>>* done = nullptr,
                    const std::function<void(unsigned, u64)>& on_partition = {});

CensusResult param_count(unsigned N, u64 X, unsigned threads = 1);

// #{b != 0 : b^2 < X, b sixth-power-free}
u64 count_j0_3(u64 X);

// pieces: number of contiguous a-range partitions (counts are additive; the
// result is identical for any split)
CensusResult stack_count_pairs(unsigned N, u64 X, unsigned pieces = 1);   // N in {2,4}
CensusResult stack_count_triples(unsigned N, u64 X, unsigned pieces = 1); // N in {3,6,8,9}
CensusResult count_quadric5(u64 X, unsigned pieces = 1);

// validation paths (desk scale): census with per-pair has_isogeny, and the
// family enumeration with a doubled region margin
u64 census_via_has_isogeny(unsigned N, u64 X);
u64 param_count_with_margin(unsigned N, u64 X, unsigned margin);

u64 iroot(u64 x, unsigned k);  // largest r with r^k <= x

}  // namespace isocount::counting
