#pragma once
// Lattice-point counting with the projection-volume error bound, the
// summatory function of B^(4), and log-log growth fitting.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace isocount::analytic {

using u64 = std::uint64_t;

// Axis-aligned-testable bounded region with exact rational membership.
struct Region {
  unsigned dim = 0;
  std::function<bool(std::span<const mpq_class>)> contains;
  std::vector<std::pair<mpq_class, mpq_class>> bbox;  // per-axis [lo, hi]
  unsigned h = 1;              // max intervals cut by an axis-parallel line
  std::vector<double> proj_volumes;  // V_m, m = 1..dim-1 (sum over projections)
  double volume = 0.0;
};

struct DavenportResult {
  long long count;
  double volume;
  double error_bound;  // sum_{m=0}^{n-1} h^(n-m) V_m, with V_0 = 1
};

// exact lattice scan over the bounding box; asserts the bound holds
DavenportResult davenport_count(const Region& r);

u64 summatory_b4(u64 T);  // sum_{1<=n<=T} b_four(n), linear sieve

struct GrowthFit {
  double alpha = 0.0;
  int beta = 0;
  double c = 0.0;        // multiplicative constant
  double residual = 0.0; // sum of squared log-residuals
};

// least squares of log(count) = log c + alpha log X + beta log log X for each
// candidate beta; returns the best.  Requires >= 4 samples spanning >= 3
// decades with positive counts.
GrowthFit fit_growth(std::span<const std::pair<double, double>> samples,
                     std::span<const int> beta_candidates);

}  // namespace isocount::analytic
