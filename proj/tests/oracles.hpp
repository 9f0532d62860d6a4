#pragma once
// Test-only oracles, independent of the library implementation paths they
// check: trial-division factoring, circle-scan r2, brute valuations, a
// chain-based isogeny detector built on the verified 2-/3-isogeny image
// formulas, and naive loop counters.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracles {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline u64 r2_circle(u64 n) {
  u64 cnt = 0;
  for (i64 x = -static_cast<i64>(n); static_cast<u64>(x * x) <= n; ++x) {
    if (x * x > static_cast<i64>(n)) continue;
    i64 rem = static_cast<i64>(n) - x * x;
    i64 y = 0;
    while (y * y < rem) ++y;
    if (y * y == rem) cnt += (y == 0) ? 1 : 2;
  }
  return cnt;
}

inline long brute_val(u64 n, u64 p) {
  long v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

inline bool brute_dagger(const std::vector<i64>& vals, const std::vector<unsigned>& pows,
                         unsigned n) {
  // scan all primes up to the largest |a_i|
  u64 top = 0;
  bool allzero = true;
  for (i64 v : vals) {
    if (v != 0) allzero = false;
    top = std::max<u64>(top, v < 0 ? -v : v);
  }
  if (allzero) throw std::domain_error("all-zero");
  for (u64 p = 2; p <= top; ++p) {
    bool isp = true;
    for (u64 d = 2; d * d <= p; ++d)
      if (p % d == 0) { isp = false; break; }
    if (!isp) continue;
    bool bad = true;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] == 0) continue;
      if (brute_val(vals[i] < 0 ? -vals[i] : vals[i], p) * pows[i] < n) { bad = false; break; }
    }
    if (bad) return false;
  }
  return true;
}

// ---- chain-based isogeny oracle (exact mpq arithmetic) ----
// 2-isogeny with kernel (x0,0):   image (A-5t, B-7*x0*t), t = 3x0^2+A,
//                                 dual kernel at x = -2*x0
// 3-isogeny with kernel x-coord x0 (root of 3x^4+6Ax^2+12Bx-A^2):
//   image (-9A-30x0^2, -42Ax0-27B-70x0^3), dual kernel at x = -3*x0
// Cyclic p^k chains: at each step exclude the pushed-forward dual point.
// Composite levels split coprime: 6 = 2*3, 12 = 4*3, 18 = 2*9.

inline std::vector<u64> trial_divisors(u64 n) {
  std::vector<u64> ds;
  for (u64 d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  return ds;
}

// rational roots of sum c_i x^i (integer coeffs), via trial divisors
inline std::vector<mpq_class> poly_rational_roots(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) return roots;
  mpz_class g = 0;
  for (auto& x : c) g = gcd(g, x);
  for (auto& x : c) x /= g;
  mpz_class cst = abs(c.front()), lead = abs(c.back());
  if (mpz_sizeinbase(cst.get_mpz_t(), 2) > 50 || mpz_sizeinbase(lead.get_mpz_t(), 2) > 50)
    throw std::domain_error("oracle root search out of range");
  auto eval = [&](const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
  };
  for (u64 r : trial_divisors(cst.get_ui()))
    for (u64 s : trial_divisors(lead.get_ui())) {
      if (std::gcd(r, s) != 1) continue;
      mpq_class q1(static_cast<unsigned long>(r), static_cast<unsigned long>(s));
      q1.canonicalize();
      if (eval(q1) == 0) roots.push_back(q1);
      mpq_class q2 = -q1;
      if (eval(q2) == 0) roots.push_back(q2);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline std::vector<mpq_class> cubic_roots_q(const mpq_class& A, const mpq_class& B) {
  mpz_class d = lcm(A.get_den(), B.get_den());
  mpq_class c1 = A * d * d, c0 = B * d * d * d;
  c1.canonicalize();
  c0.canonicalize();
  auto roots = poly_rational_roots({c0.get_num(), c1.get_num(), 0, 1});
  for (auto& r : roots) {
    r /= d;
    r.canonicalize();
  }
  return roots;
}

inline std::vector<mpq_class> psi3_roots_q(const mpq_class& A, const mpq_class& B) {
  mpz_class d = lcm(A.get_den(), B.get_den());
  // 3x^4+6Ax^2+12Bx-A^2 cleared by x -> y/d: 3y^4 + 6Ad^2 y^2 + 12Bd^3 y - A^2 d^4
  mpq_class c2 = 6 * A * d * d, c1 = 12 * B * d * d * d, c0 = -A * A * d * d * d * d;
  c2.canonicalize(); c1.canonicalize(); c0.canonicalize();
  auto roots = poly_rational_roots({c0.get_num(), c1.get_num(), c2.get_num(), 0, 3});
  for (auto& r : roots) {
    r /= d;
    r.canonicalize();
  }
  return roots;
}

struct ChainState {
  mpq_class A, B;
  bool has_bad = false;
  mpq_class bad;  // x-coordinate whose kernel would collapse cyclicity
};

inline bool chain_pk(const mpq_class& A, const mpq_class& B, unsigned p, unsigned k) {
  std::vector<ChainState> frontier{{A, B, false, 0}};
  for (unsigned depth = 0; depth < k; ++depth) {
    std::vector<ChainState> next;
    for (auto& st : frontier) {
      auto roots = (p == 2) ? cubic_roots_q(st.A, st.B) : psi3_roots_q(st.A, st.B);
      for (auto& x0 : roots) {
        if (st.has_bad && x0 == st.bad) continue;
        ChainState ns;
        ns.has_bad = true;
        if (p == 2) {
          mpq_class t = 3 * x0 * x0 + st.A;
          ns.A = st.A - 5 * t;
          ns.B = st.B - 7 * x0 * t;
          ns.bad = -2 * x0;
          if (st.has_bad) ns.bad = st.bad + t / (st.bad - x0);
        } else {
          mpq_class T = 2 * st.A + 6 * x0 * x0;
          mpq_class U = 4 * (x0 * x0 * x0 + st.A * x0 + st.B);
          ns.A = -9 * st.A - 30 * x0 * x0;
          ns.B = -42 * st.A * x0 - 27 * st.B - 70 * x0 * x0 * x0;
          ns.bad = -3 * x0;
          if (st.has_bad)
            ns.bad = st.bad + T / (st.bad - x0) + U / ((st.bad - x0) * (st.bad - x0));
        }
        ns.bad.canonicalize();
        next.push_back(std::move(ns));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  return true;
}

inline bool chain_has_isogeny(i64 A, i64 B, unsigned N) {
  mpq_class a(static_cast<long>(A)), b(static_cast<long>(B));
  switch (N) {
    case 2: return !cubic_roots_q(a, b).empty();
    case 3: return !psi3_roots_q(a, b).empty();
    case 4: return chain_pk(a, b, 2, 2);
    case 6: return !cubic_roots_q(a, b).empty() && !psi3_roots_q(a, b).empty();
    case 8: return chain_pk(a, b, 2, 3);
    case 9: return chain_pk(a, b, 3, 2);
    case 12: return chain_pk(a, b, 2, 2) && !psi3_roots_q(a, b).empty();
    case 16: return chain_pk(a, b, 2, 4);
    case 18: return !cubic_roots_q(a, b).empty() && chain_pk(a, b, 3, 2);
    default: throw std::domain_error("chain oracle: unsupported level");
  }
}

// naive quadric5 triple loop (exact)
inline u64 quadric5_naive(u64 X) {
  auto iroot = [](u64 x, unsigned k) {
    u64 r = 0;
    while (true) {
      i128 p = 1;
      for (unsigned i = 0; i < k; ++i) p *= (r + 1);
      if (p > static_cast<i128>(x)) break;
      ++r;
    }
    return r;
  };
  if (X < 1) return 0;
  i64 am = static_cast<i64>(iroot(X - 1, 6));
  i64 bm = static_cast<i64>(iroot(X - 1, 3));
  u64 cnt = 0;
  std::vector<i64> vals(3);
  std::vector<unsigned> pows{6, 3, 3};
  for (i64 a = -am; a <= am; ++a)
    for (i64 b = -bm; b <= bm; ++b)
      for (i64 c = -bm; c <= bm; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (static_cast<i128>(b) * b - static_cast<i128>(a) * a * c -
                4 * static_cast<i128>(b) * c + 8 * static_cast<i128>(c) * c != 0)
          continue;
        vals = {a, b, c};
        if (brute_dagger(vals, pows, 12)) ++cnt;
      }
  return cnt;
}

}  // namespace oracles
