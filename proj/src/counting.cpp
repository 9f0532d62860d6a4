#include "isocount/counting.hpp"

#include <algorithm>
#include <numeric>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <future>
#include <stdexcept>
#include <unordered_set>

#include "isocount/curves.hpp"
#include "isocount/families.hpp"
#include "isocount/isogeny.hpp"
#include "isocount/numtheory.hpp"

// ---------------------------------------------------------------------------
// Enumeration scheme for the family pipeline.
//
// A curve has the level-N structure iff (A,B) = (w^2 f(t), w^3 g(t)) for some
// rational w, t (quadratic twists absorbed into w).  For fixed t the integral
// members of the orbit are exactly w = w0(t) * k, k in Z \ {0}, where
//     w0(t) = prod_p p^theta_p,  theta_p = max(ceil(-v_p(f)/2), ceil(-v_p(g)/3)),
// and the curve at w0*k is minimal iff k is squarefree.  So each t contributes
// the curves (A1 k^2, B1 k^3), k squarefree, A1 = w0^2 f(t), B1 = w0^3 g(t),
// clipped by max(|A|^3, B^2) < X.  t runs over a/b^m with gcd(a, b^m) m-th
// power free (a unique representation), inside region bounds of shape
//     |a| <= M X^(m/6n) c^(m/n),   b <= M X^(1/6n) c^(1/n),
// where c = prod_{p | b, p^w | a} p^h stratifies the N=3 case (c = 1 for the
// levels with h = 0).  The margin M is frozen after the doubling-stability
// and census-equality validations.
// ---------------------------------------------------------------------------

namespace isocount::counting {

namespace {

using i128 = __int128;
using curves::Curve;

constexpr unsigned kParamMargin = 8;

u64 pack_pair(i64 a, i64 b) {
  return (static_cast<u64>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<u64>(static_cast<std::uint32_t>(b));
}

long ceil_neg_div(long v, long d) {
  // ceil(-v/d) for d > 0, using floor semantics of C++ integer division
  long q = v / d;
  if (v % d != 0 && ((v < 0) != (d < 0))) --q;  // q = floor(v/d)
  return -q;
}

struct Orbit {
  i64 A1, B1;  // minimal curve of the t-orbit (k = 1)
};

// visits every contributing t with b in the stride class (b % stride == offs)
template <typename F>
void for_each_orbit(unsigned N, u64 X, unsigned margin, unsigned stride,
                    unsigned offs, F&& visit) {
  const auto& fs = families::family(N);
  const unsigned m = fs.m, n = fs.n, h = fs.h, w = fs.w;
  const double Xd = static_cast<double>(X);
  const double x_b = std::pow(Xd, 1.0 / (6.0 * n));
  const double x_a = std::pow(Xd, static_cast<double>(m) / (6.0 * n));
  u64 bmax = h ? static_cast<u64>(margin * (double)margin * std::pow(Xd, 1.0 / 6.0)) + 1
              : static_cast<u64>(margin * x_b) + 1;
  mpz_class fd = fs.f_den, gd = fs.g_den;

  for (u64 b = (offs == 0 ? stride : offs); b <= bmax; b += stride) {
    // b = 0 never occurs; b starts at `offs` (or stride when offs = 0)
    std::vector<u64> bprimes;
    for (auto& [p, e] : numtheory::factorize(static_cast<i64>(b)).pairs)
      bprimes.push_back(p);
    std::vector<u64> strata;
    if (h == 0) {
      strata.push_back(1);
    } else {
      u64 radb = 1;
      for (u64 p : bprimes) radb *= p;
      for (u64 c : numtheory::divisors(radb)) {
        if (static_cast<double>(b) <= margin * x_b * std::pow((double)c, 1.0 / n) + 1)
          strata.push_back(c);
      }
    }
    mpz_class bm;
    mpz_ui_pow_ui(bm.get_mpz_t(), b, m);
    for (u64 c : strata) {
      u64 c2 = c * c;
      double amax_d = margin * x_a * std::pow((double)c, (double)m / n) + 1;
      i64 apmax = static_cast<i64>(amax_d / (h ? (double)c2 : 1.0)) + 1;
      for (i64 ap = -apmax; ap <= apmax; ++ap) {
        i64 a = h ? ap * static_cast<i64>(c2) : ap;
        if (a == 0 && b != 1) continue;
        if (h) {
          // stratum consistency: c(a,b) = prod_{p | b, p^2 | a} p must equal c
          u64 cc = 1;
          for (u64 p : bprimes)
            if (a == 0 || a % static_cast<i64>(p * p) == 0) cc *= p;
          if (cc != c) continue;
        }
        // canonical representation: gcd(a, b^m) m-th power free, i.e. no prime
        // with p | b and p^m | a
        if (a != 0 && b > 1) {
          bool bad = false;
          for (u64 p : bprimes) {
            if (a % static_cast<i64>(p) != 0) continue;
            if (static_cast<unsigned>(numtheory::val_p(mpz_class(static_cast<long>(a)), p)) >= m) {
              bad = true;
              break;
            }
          }
          if (bad) continue;
        }
        mpq_class t(a, bm);
        t.canonicalize();
        mpq_class fv = fs.f.eval(t) / mpq_class(fd);
        mpq_class gv = fs.g.eval(t) / mpq_class(gd);
        fv.canonicalize();
        gv.canonicalize();
        if (4 * fv * fv * fv + 27 * gv * gv == 0) continue;  // cusp-degenerate
        // w0 via theta_p.  theta_p can be nonzero only at primes of the
        // denominators (divisors of f_den*g_den*b) or of the shared numerator
        // content, whose support lies in the resultant of (f,g) and the
        // clearing constants; both sets are {2,3}-smooth for every family,
        // so {2,3} + primes(b) covers everything.
        std::vector<u64> wprimes{2, 3};
        for (u64 p : bprimes)
          if (p != 2 && p != 3) wprimes.push_back(p);
        mpq_class w0(1);
        for (u64 p : wprimes) {
          long th = LONG_MIN;
          if (fv != 0) th = std::max(th, ceil_neg_div(numtheory::val_p(fv, p), 2));
          if (gv != 0) th = std::max(th, ceil_neg_div(numtheory::val_p(gv, p), 3));
          if (th == LONG_MIN || th == 0) continue;
          mpz_class pp;
          mpz_ui_pow_ui(pp.get_mpz_t(), p, static_cast<unsigned long>(th < 0 ? -th : th));
          if (th > 0) w0 *= pp;
          else w0 /= pp;
        }
        w0.canonicalize();
        mpq_class A1q = w0 * w0 * fv, B1q = w0 * w0 * w0 * gv;
        A1q.canonicalize();
        B1q.canonicalize();
        if (A1q.get_den() != 1 || B1q.get_den() != 1)
          throw std::logic_error("for_each_orbit: w0 normalization failed");
        mpz_class A1z = A1q.get_num(), B1z = B1q.get_num();
        mpz_class ht = abs(A1z);
        ht = ht * ht * ht;
        mpz_class b2 = B1z * B1z;
        if (b2 > ht) ht = b2;
        if (ht >= static_cast<unsigned long>(X)) continue;  // no contribution
        if (!A1z.fits_slong_p() || !B1z.fits_slong_p())
          throw std::logic_error("for_each_orbit: curve exceeds i64");
        visit(Orbit{static_cast<i64>(A1z.get_si()), static_cast<i64>(B1z.get_si())});
      }
    }
  }
  (void)w;
}

// expand one orbit into minimal curves under height X, insert into the set
void expand_orbit(const Orbit& o, unsigned N, u64 X, std::unordered_set<u64>& out) {
  for (u64 k = 1;; ++k) {
    i128 A = static_cast<i128>(o.A1) * k * k;
    i128 B = static_cast<i128>(o.B1) * k * k * k;
    i128 a3 = A < 0 ? -A : A;
    a3 = a3 * a3 * a3;
    i128 b2 = B * B;
    i128 ht = a3 > b2 ? a3 : b2;
    if (ht >= static_cast<i128>(X)) break;
    if (!numtheory::is_squarefree(k)) continue;
    i64 Ai = static_cast<i64>(A), Bi = static_cast<i64>(B);
    if (N == 3 && Ai == 0) continue;  // j=0 counted by count_j0_3
    out.insert(pack_pair(Ai, Bi));
    out.insert(pack_pair(Ai, -Bi));
  }
}

}  // namespace

u64 iroot(u64 x, unsigned k) {
  if (x == 0 || k == 0) return 0;
  if (k == 1) return x;
  u64 r = static_cast<u64>(std::pow(static_cast<double>(x), 1.0 / k));
  auto pow_le = [&](u64 v) {
    i128 p = 1;
    for (unsigned i = 0; i < k; ++i) {
      p *= v;
      if (p > static_cast<i128>(x)) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

// ---------------------------------------------------------------- detector

Detector::Detector(unsigned N, u64 X) : N_(N), X_(X) {
  if (!isogeny::level_supported(N)) throw std::domain_error("census: unsupported level");
  if (N == 2 || N == 5) {
    // N=2: integer-root test (monic 2-torsion cubic); N=5: no family region,
    // fall back to per-pair Route A
    direct_ = (N == 5);
    return;
  }
  std::vector<std::pair<i64, i64>> js;
  for_each_orbit(N, X, kParamMargin, 1, 0, [&](const Orbit& o) {
    if (o.A1 == 0 || o.B1 == 0) return;  // special columns use the fiber tables
    i128 num = static_cast<i128>(6912) * o.A1 * o.A1 * o.A1;
    i128 den = static_cast<i128>(4) * o.A1 * o.A1 * o.A1 +
               static_cast<i128>(27) * o.B1 * o.B1;
    if (den < 0) { den = -den; num = -num; }
    i128 g = den;
    i128 an = num < 0 ? -num : num;
    while (an) { i128 t = g % an; g = an; an = t; }
    num /= g;
    den /= g;
    js.emplace_back(static_cast<i64>(num), static_cast<i64>(den));
  });
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  jset_ = std::move(js);
}

bool Detector::operator()(i64 A, i64 B) const {
  if (A == 0 || B == 0 || N_ == 2 || direct_) {
    // special fibers and the direct levels share the Route A entry point
    return isogeny::has_isogeny(Curve{mpz_class(static_cast<long>(A)),
                                      mpz_class(static_cast<long>(B))},
                                N_);
  }
  i128 num = static_cast<i128>(6912) * A * A * A;
  i128 den = static_cast<i128>(4) * A * A * A + static_cast<i128>(27) * B * B;
  if (den < 0) { den = -den; num = -num; }
  i128 g = den;
  i128 an = num < 0 ? -num : num;
  while (an) { i128 t = g % an; g = an; an = t; }
  num /= g;
  den /= g;
  if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) return false;
  return std::binary_search(jset_.begin(), jset_.end(),
                            std::make_pair(static_cast<i64>(num), static_cast<i64>(den)));
}

// ------------------------------------------------------------------ census

std::vector<Partition> census_partitions(u64 X, unsigned pieces) {
  i64 amax = static_cast<i64>(iroot(X ? X - 1 : 0, 3));
  std::vector<Partition> parts;
  if (pieces == 0) pieces = 1;
  i64 total = 2 * amax + 1;
  i64 base = total / static_cast<i64>(pieces);
  i64 extra = total % static_cast<i64>(pieces);
  i64 lo = -amax;
  for (unsigned i = 0; i < pieces && lo <= amax; ++i) {
    i64 len = base + (static_cast<i64>(i) < extra ? 1 : 0);
    if (len <= 0) len = 1;
    i64 hi = std::min(amax, lo + len - 1);
    parts.push_back({i, lo, hi});
    lo = hi + 1;
  }
  return parts;
}

namespace {

// N=2 fast check: x^3 + Ax + B has an integer root (roots of the monic
// integral cubic are integral); equivalent to Route B and, by the route
// agreement invariant, to Route A
bool two_torsion_fast(i64 A, i64 B) {
  if (B == 0) return true;  // x = 0
  u64 ab = static_cast<u64>(B < 0 ? -B : B);
  for (u64 d : numtheory::divisors(ab)) {
    i128 x = static_cast<i128>(d);
    if (x * x * x + static_cast<i128>(A) * x + B == 0) return true;
    x = -x;
    if (x * x * x + static_cast<i128>(A) * x + B == 0) return true;
  }
  return false;
}

bool pair_minimal(i64 A, i64 B) {
  if (A == 0) {
    u64 b = static_cast<u64>(B < 0 ? -B : B);
    for (u64 p = 2; p * p * p * p * p * p <= b; ++p)
      if (b % (p * p * p * p * p * p) == 0 && numtheory::is_prime(p)) return false;
    return true;
  }
  if (B == 0) {
    u64 a = static_cast<u64>(A < 0 ? -A : A);
    for (u64 p = 2; p * p * p * p <= a; ++p)
      if (a % (p * p * p * p) == 0 && numtheory::is_prime(p)) return false;
    return true;
  }
  u64 g = std::gcd(static_cast<u64>(A < 0 ? -A : A), static_cast<u64>(B < 0 ? -B : B));
  if (g == 1) return true;
  for (u64 p = 2; p * p * p * p <= static_cast<u64>(A < 0 ? -A : A) + 1; ++p) {
    if (!numtheory::is_prime(p)) continue;
    u64 p4 = p * p * p * p;
    if (static_cast<u64>(A < 0 ? -A : A) % p4 == 0) {
      u64 p6 = p4 * p * p;
      if (static_cast<u64>(B < 0 ? -B : B) % p6 == 0) return false;
    }
  }
  return true;
}

}  // namespace

u64 census_partition_count(const Detector& det, u64 X, i64 a_lo, i64 a_hi) {
  u64 cnt = 0;
  i64 bmax = static_cast<i64>(iroot(X ? X - 1 : 0, 2));
  const bool is2 = det.level() == 2;
  for (i64 A = a_lo; A <= a_hi; ++A) {
    for (i64 B = -bmax; B <= bmax; ++B) {
      i128 disc = static_cast<i128>(4) * A * A * A + static_cast<i128>(27) * B * B;
      if (disc == 0) continue;
      if (!pair_minimal(A, B)) continue;
      bool hit = (is2 && A != 0 && B != 0) ? two_torsion_fast(A, B) : det(A, B);
      if (hit) ++cnt;
    }
  }
  return cnt;
}

CensusResult census(unsigned N, u64 X, unsigned threads, unsigned pieces,
                    const std::vector<std::pair<unsigned, u64>>* done,
                    const std::function<void(unsigned, u64)>& on_partition) {
  auto t0 = std::chrono::steady_clock::now();
  if (X < 1) throw std::domain_error("census: X must be >= 1");
  Detector det(N, X);
  auto parts = census_partitions(X, pieces);
  std::vector<u64> counts(parts.size(), 0);
  std::vector<std::uint8_t> have(parts.size(), 0);
  if (done)
    for (auto& [id, c] : *done)
      if (id < parts.size()) { counts[id] = c; have[id] = 1; }
  if (threads < 1) threads = 1;
  std::vector<unsigned> todo;
  for (unsigned i = 0; i < parts.size(); ++i)
    if (!have[i]) todo.push_back(i);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) break;
      unsigned id = todo[i];
      counts[id] = census_partition_count(det, X, parts[id].a_lo, parts[id].a_hi);
    }
  };
  std::vector<std::future<void>> fs;
  for (unsigned i = 1; i < threads; ++i)
    fs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : fs) f.get();
  u64 total = 0;
  for (unsigned i = 0; i < parts.size(); ++i) {
    total += counts[i];
    if (on_partition) on_partition(parts[i].id, counts[i]);
  }
  CensusResult r{N, X, total, "census", 0.0};
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ------------------------------------------------------------- param_count

u64 param_count_with_margin(unsigned N, u64 X, unsigned margin) {
  if (!families::family_supported(N))
    throw std::domain_error("param_count: unsupported level");
  std::unordered_set<u64> seen;
  for_each_orbit(N, X, margin, 1, 0,
                 [&](const Orbit& o) { expand_orbit(o, N, X, seen); });
  u64 total = seen.size();
  if (N == 3) total += count_j0_3(X);
  return total;
}

CensusResult param_count(unsigned N, u64 X, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (!families::family_supported(N))
    throw std::domain_error("param_count: unsupported level");
  if (threads < 1) threads = 1;
  std::vector<std::unordered_set<u64>> sets(threads);
  std::vector<std::future<void>> fs;
  for (unsigned r = 0; r < threads; ++r) {
    fs.push_back(std::async(std::launch::async, [&, r]() {
      for_each_orbit(N, X, kParamMargin, threads, r,
                     [&](const Orbit& o) { expand_orbit(o, N, X, sets[r]); });
    }));
  }
  for (auto& f : fs) f.get();
  std::unordered_set<u64> merged;
  for (auto& s : sets) merged.insert(s.begin(), s.end());
  u64 total = merged.size();
  if (N == 3) total += count_j0_3(X);
  CensusResult res{N, X, total, "param", 0.0};
  res.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

u64 census_via_has_isogeny(unsigned N, u64 X) {
  u64 cnt = 0;
  i64 amax = static_cast<i64>(iroot(X ? X - 1 : 0, 3));
  i64 bmax = static_cast<i64>(iroot(X ? X - 1 : 0, 2));
  for (i64 A = -amax; A <= amax; ++A)
    for (i64 B = -bmax; B <= bmax; ++B) {
      i128 disc = static_cast<i128>(4) * A * A * A + static_cast<i128>(27) * B * B;
      if (disc == 0) continue;
      if (!pair_minimal(A, B)) continue;
      Curve c{mpz_class(static_cast<long>(A)), mpz_class(static_cast<long>(B))};
      if (isogeny::has_isogeny(c, N)) ++cnt;
    }
  return cnt;
}

// ------------------------------------------------------------ stack counts

u64 count_j0_3(u64 X) {
  if (X < 1) throw std::domain_error("count_j0_3: X must be >= 1");
  if (X == 1) return 0;
  u64 Y = iroot(X - 1, 2);  // largest |b| with b^2 < X
  // #{1<=b<=Y : sixth-power-free} = sum_{d^6 <= Y} mu(d) floor(Y/d^6)
  u64 cnt = 0;
  for (u64 d = 1; d * d * d * d * d * d <= Y; ++d) {
    if (!numtheory::is_squarefree(d)) continue;
    auto f = numtheory::factorize(static_cast<i64>(d));
    int mu = (f.pairs.size() % 2 == 0) ? 1 : -1;
    u64 d6 = d * d * d * d * d * d;
    cnt += static_cast<u64>(mu * static_cast<i64>(Y / d6));
  }
  return 2 * cnt;
}

namespace {
bool dagger_pair(i64 a, i64 b, unsigned pa, unsigned pb) {
  // (dagger) with n = 12; zero entries have infinite valuation
  u64 g;
  if (a == 0 && b == 0) throw std::domain_error("dagger: all-zero tuple");
  if (a == 0) g = static_cast<u64>(b < 0 ? -b : b);
  else if (b == 0) g = static_cast<u64>(a < 0 ? -a : a);
  else g = std::gcd(static_cast<u64>(a < 0 ? -a : a), static_cast<u64>(b < 0 ? -b : b));
  if (g == 1) return true;
  for (auto& [p, e] : numtheory::factorize(static_cast<i64>(g)).pairs) {
    bool bad_a = (a == 0) || numtheory::val_p(mpz_class(static_cast<long>(a)), p) * pa >= 12;
    bool bad_b = (b == 0) || numtheory::val_p(mpz_class(static_cast<long>(b)), p) * pb >= 12;
    if (bad_a && bad_b) return false;
  }
  return true;
}

bool dagger_triple(i64 a, i64 b, i64 c, const unsigned p[3]) {
  if (a == 0 && b == 0 && c == 0) throw std::domain_error("dagger: all-zero tuple");
  u64 g = 0;
  for (i64 v : {a, b, c})
    if (v != 0) g = std::gcd(g, static_cast<u64>(v < 0 ? -v : v));
  if (g == 1) return true;
  for (auto& [q, e] : numtheory::factorize(static_cast<i64>(g)).pairs) {
    bool bad = true;
    i64 vs[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
      if (vs[i] == 0) continue;
      if (numtheory::val_p(mpz_class(static_cast<long>(vs[i])), q) * p[i] < 12) {
        bad = false;
        break;
      }
    }
    if (bad) return false;
  }
  return true;
}
}  // namespace

namespace {
// contiguous split of [lo, hi] into `pieces` ranges (some possibly empty)
std::vector<std::pair<i64, i64>> split_range(i64 lo, i64 hi, unsigned pieces) {
  std::vector<std::pair<i64, i64>> out;
  if (pieces == 0) pieces = 1;
  i64 total = hi - lo + 1;
  if (total <= 0) return out;
  i64 base = total / static_cast<i64>(pieces);
  i64 extra = total % static_cast<i64>(pieces);
  i64 cur = lo;
  for (unsigned i = 0; i < pieces && cur <= hi; ++i) {
    i64 len = base + (static_cast<i64>(i) < extra ? 1 : 0);
    if (len <= 0) len = 1;
    i64 end = std::min(hi, cur + len - 1);
    out.emplace_back(cur, end);
    cur = end + 1;
  }
  return out;
}
}  // namespace

CensusResult stack_count_pairs(unsigned N, u64 X, unsigned pieces) {
  auto t0 = std::chrono::steady_clock::now();
  if (N != 2 && N != 4) throw std::domain_error("stack_count_pairs: N must be 2 or 4");
  unsigned pa = 6, pb = (N == 2) ? 3 : 6;
  u64 cnt = 0;
  if (X >= 1) {
    i64 am = static_cast<i64>(iroot(X ? X - 1 : 0, pa));
    i64 bm = static_cast<i64>(iroot(X ? X - 1 : 0, pb));
    for (auto [lo, hi] : split_range(-am, am, pieces))
      for (i64 a = lo; a <= hi; ++a)
        for (i64 b = -bm; b <= bm; ++b) {
          if (a == 0 && b == 0) continue;
          if (dagger_pair(a, b, pa, pb)) ++cnt;
        }
  }
  CensusResult r{N, X, cnt, "stack", 0.0};
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CensusResult stack_count_triples(unsigned N, u64 X, unsigned pieces) {
  auto t0 = std::chrono::steady_clock::now();
  if (N != 3 && N != 6 && N != 8 && N != 9)
    throw std::domain_error("stack_count_triples: N must be in {3,6,8,9}");
  const unsigned p3[3] = {6u, (N == 3) ? 3u : 6u, (N == 3) ? 2u : 6u};
  u64 cnt = 0;
  i64 am = static_cast<i64>(iroot(X ? X - 1 : 0, p3[0]));
  i64 bm = static_cast<i64>(iroot(X ? X - 1 : 0, p3[1]));
  i64 cm = static_cast<i64>(iroot(X ? X - 1 : 0, p3[2]));
  // a = 0 forces b = 0 on the quadric; c sweeps the remaining line
  for (i64 c = -cm; c <= cm; ++c) {
    if (c == 0) continue;
    if (dagger_triple(0, 0, c, p3)) ++cnt;
  }
  for (auto [lo, hi] : split_range(-am, am, pieces))
    for (i64 a = lo; a <= hi; ++a) {
      if (a == 0) continue;
      for (i64 b = -bm; b <= bm; ++b) {
        if ((static_cast<i128>(b) * b) % a != 0) continue;
        i64 c = static_cast<i64>(static_cast<i128>(b) * b / a);
        i128 cp = 1;
        bool over = false;
        for (unsigned i = 0; i < p3[2]; ++i) {
          cp *= (c < 0 ? -c : c);
          if (cp >= static_cast<i128>(X)) { over = true; break; }
        }
        if (over) continue;
        if (dagger_triple(a, b, c, p3)) ++cnt;
      }
    }
  CensusResult r{N, X, cnt, "stack", 0.0};
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CensusResult count_quadric5(u64 X, unsigned pieces) {
  // b^2 - a^2 c - 4bc + 8c^2 = 0 with Ht^(6,3,3) < X and (dagger), counted via
  // the rearrangement (4b - 8c)^2 + (8c - a^2)^2 = a^4 and two-squares
  // enumeration for each a; a = 0 forces b = c = 0 (excluded).
  auto t0 = std::chrono::steady_clock::now();
  u64 cnt = 0;
  i64 am = static_cast<i64>(iroot(X ? X - 1 : 0, 6));
  i64 bm = static_cast<i64>(iroot(X ? X - 1 : 0, 3));
  const unsigned p3[3] = {6, 3, 3};
  std::vector<std::pair<i64, i64>> pranges = split_range(1, am, pieces);
  for (auto [plo, phi] : pranges)
  for (i64 a = plo; a <= phi; ++a) {
    u64 a4 = static_cast<u64>(a) * a * a * a;
    auto reps = numtheory::two_square_representations(a4);
    for (auto& [U, V] : reps) {
      // U = 4b - 8c, V = 8c - a^2
      i64 num_c = V + static_cast<i64>(a) * a;
      if (num_c % 8 != 0) continue;
      i64 c = num_c / 8;
      i64 num_b = U + 8 * c;
      if (num_b % 4 != 0) continue;
      i64 b = num_b / 4;
      if (b < -bm || b > bm || c < -bm || c > bm) continue;
      if (static_cast<i128>(b) * b - static_cast<i128>(a) * a * c - 4 * static_cast<i128>(b) * c +
              8 * static_cast<i128>(c) * c != 0)
        continue;
      for (i64 aa : {a, -a})
        if (dagger_triple(aa, b, c, p3)) ++cnt;
    }
  }
  CensusResult r{5, X, cnt, "stack", 0.0};
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace isocount::counting
