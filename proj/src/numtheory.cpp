#include "isocount/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace isocount::numtheory {

namespace {

using u128 = unsigned __int128;

std::vector<u32> g_spf;       // g_spf[n] = smallest prime factor of n
std::mutex g_spf_mutex;
std::atomic<std::size_t> g_spf_ready{0};  // usable size, published after build

void build_spf_locked(std::size_t bound) {
  g_spf.assign(bound + 1, 0);
  for (std::size_t i = 2; i <= bound; ++i) {
    if (g_spf[i] == 0) {
      for (std::size_t j = i; j <= bound; j += i)
        if (g_spf[j] == 0) g_spf[j] = static_cast<u32>(i);
    }
  }
  g_spf_ready.store(g_spf.size(), std::memory_order_release);
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (n % a == 0) return n == a;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_brent(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 x = 2, y = 2, c = 1, d = 1;
  auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  while (true) {
    x = 2; y = 2; d = 1;
    u64 q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = f(y);
      int k = 0;
      while (k < lam && d == 1) {
        u64 ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // backtrack
          d = 1;
          y = ys;
          do {
            y = f(y);
            d = std::gcd(n, x > y ? x - y : y - x);
          } while (d == 1);
          break;
        }
        k += lim;
      }
      lam *= 2;
      if (lam > (1 << 24)) break;
    }
    if (d != n && d != 1) return d;
    ++c;
  }
}

void factor_u64(u64 n, std::vector<std::pair<u64, u32>>& out) {
  if (n == 1) return;
  if (n < g_spf.size()) {
    while (n > 1) {
      u64 p = g_spf[n];
      u32 e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
    return;
  }
  if (is_prime(n)) { out.emplace_back(n, 1); return; }
  u64 d = pollard_brent(n);
  std::vector<std::pair<u64, u32>> a, b;
  factor_u64(d, a);
  factor_u64(n / d, b);
  // merge exponent maps
  for (auto& pr : b) {
    bool merged = false;
    for (auto& qa : a)
      if (qa.first == pr.first) { qa.second += pr.second; merged = true; break; }
    if (!merged) a.push_back(pr);
  }
  for (auto& pr : a) out.push_back(pr);
}

}  // namespace

void ensure_spf(std::size_t bound) {
  if (g_spf_ready.load(std::memory_order_acquire) >= bound + 1) return;
  std::lock_guard<std::mutex> lk(g_spf_mutex);
  if (g_spf.size() < bound + 1) build_spf_locked(bound);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

mpz_class Factorization::reconstruct_abs() const {
  mpz_class r = 1;
  for (auto& [p, e] : pairs) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    r *= pe;
  }
  return r;
}

Factorization factorize(i64 n) {
  if (n == 0) throw std::domain_error("factorize: zero input");
  ensure_spf();
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  u64 m = n < 0 ? -static_cast<u64>(n) : static_cast<u64>(n);
  factor_u64(m, f.pairs);
  std::sort(f.pairs.begin(), f.pairs.end());
  return f;
}

Factorization factorize(const mpz_class& n) {
  if (n == 0) throw std::domain_error("factorize: zero input");
  if (!n.fits_slong_p()) {
    // 64-bit magnitude still fits via export
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63)
      throw std::domain_error("factorize: input exceeds 63 bits");
  }
  Factorization f;
  f.sign = sgn(n) < 0 ? -1 : 1;
  mpz_class a = abs(n);
  u64 m = mpz_get_ui(a.get_mpz_t());
  ensure_spf();
  factor_u64(m, f.pairs);
  std::sort(f.pairs.begin(), f.pairs.end());
  return f;
}

long val_p(const mpz_class& z, u64 p) {
  if (z == 0) throw std::domain_error("val_p: valuation of zero");
  mpz_class r = abs(z);
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long val_p(const mpq_class& q, u64 p) {
  if (q == 0) throw std::domain_error("val_p: valuation of zero");
  long v = 0;
  if (mpz_divisible_ui_p(q.get_num().get_mpz_t(), p)) v = val_p(q.get_num(), p);
  else if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p)) v = -val_p(q.get_den(), p);
  return v;
}

std::pair<mpz_class, mpz_class> power_free_decompose(const mpz_class& n, unsigned k) {
  if (n == 0) throw std::domain_error("power_free_decompose: zero input");
  if (k < 2) throw std::domain_error("power_free_decompose: k must be >= 2");
  Factorization f = factorize(n);
  mpz_class core = f.sign, d = 1;
  for (auto& [p, e] : f.pairs) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e % k);
    core *= pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e / k);
    d *= pe;
  }
  return {core, d};
}

u64 b_four(u64 n) {
  if (n == 0) throw std::domain_error("b_four: zero input");
  if (n == 1) return 1;
  Factorization f = factorize(static_cast<i64>(n));
  u64 r = 1;
  for (auto& [p, e] : f.pairs)
    if (p % 4 == 1) r *= 4ull * e + 1;
  return r;
}

u64 r2(u64 n) {
  if (n == 0) throw std::domain_error("r2: zero input");
  if (n == 1) return 4;
  Factorization f = factorize(static_cast<i64>(n));
  u64 b = 1;
  for (auto& [p, e] : f.pairs) {
    if (p % 4 == 1) b *= e + 1;
    else if (p % 4 == 3 && (e & 1)) return 0;
  }
  return 4 * b;
}

bool is_dagger_minimal(std::span<const mpz_class> values,
                       std::span<const unsigned> powers, unsigned n) {
  if (values.size() != powers.size())
    throw std::domain_error("is_dagger_minimal: tuple length mismatch");
  bool all_zero = true;
  for (auto& v : values)
    if (v != 0) { all_zero = false; break; }
  if (all_zero) throw std::domain_error("is_dagger_minimal: all-zero tuple");
  // primes to test: those dividing every nonzero |a_i| suffice
  mpz_class g = 0;
  for (auto& v : values)
    if (v != 0) g = gcd(g, v);
  g = abs(g);
  if (g == 1) return true;
  Factorization gf = factorize(g);
  for (auto& [p, e] : gf.pairs) {
    bool bad = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0) continue;  // val = +inf, never blocks
      if (static_cast<unsigned long>(val_p(values[i], p)) * powers[i] < n) {
        bad = false;
        break;
      }
    }
    if (bad) return false;
  }
  return true;
}

bool is_dagger_minimal(std::span<const i64> values,
                       std::span<const unsigned> powers, unsigned n) {
  std::vector<mpz_class> vs(values.begin(), values.end());
  return is_dagger_minimal(std::span<const mpz_class>(vs), powers, n);
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  if (n < 4) return true;
  Factorization f = factorize(static_cast<i64>(n));
  for (auto& [p, e] : f.pairs)
    if (e >= 2) return false;
  return true;
}

u64 radical(u64 n) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  Factorization f = factorize(static_cast<i64>(n));
  u64 r = 1;
  for (auto& [p, e] : f.pairs) r *= p;
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  if (n <= 1) return out;
  Factorization f = factorize(static_cast<i64>(n));
  for (auto& [p, e] : f.pairs) {
    std::size_t sz = out.size();
    u64 pw = 1;
    for (u32 i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t k = 0; k < sz; ++k) out.push_back(out[k] * pw);
    }
  }
  return out;
}

u64 cube_class(const mpq_class& q) {
  if (q == 0) throw std::domain_error("cube_class: zero input");
  mpz_class m = abs(q.get_num() * q.get_den() * q.get_den());
  Factorization f = factorize(m == 0 ? mpz_class(1) : m);
  u64 out = 1;
  if (m != 1)
    for (auto& [p, e] : f.pairs) {
      u32 r = e % 3;
      for (u32 i = 0; i < r; ++i) out *= p;
    }
  return out;
}

i64 square_class(const mpq_class& q) {
  if (q == 0) throw std::domain_error("square_class: zero input");
  mpz_class m = q.get_num() * q.get_den();
  i64 out = sgn(m) < 0 ? -1 : 1;
  mpz_class a = abs(m);
  if (a != 1) {
    Factorization f = factorize(a);
    for (auto& [p, e] : f.pairs)
      if (e & 1) out *= static_cast<i64>(p);
  }
  return out;
}

namespace {
// x^2 = -1 mod p for p = 1 mod 4 (Tonelli for this special case)
u64 sqrt_minus_one(u64 p) {
  for (u64 a = 2;; ++a) {
    u64 c = powmod(a, (p - 1) / 4, p);
    if (mulmod(c, c, p) == p - 1) return c;
  }
}

// primitive representation p = x^2 + y^2 via Cornacchia
std::pair<u64, u64> cornacchia(u64 p) {
  if (p == 2) return {1, 1};
  u64 r0 = p, r1 = sqrt_minus_one(p);
  if (r1 > p - r1) r1 = p - r1;
  // descend Euclid until below sqrt(p)
  u64 lim = 1;
  while (lim * lim < p) ++lim;  // lim = ceil(sqrt(p))
  while (r1 * r1 >= p) {
    u64 t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  u64 x = r1;
  u64 y2 = p - x * x;
  u64 y = 0;
  while (y * y < y2) ++y;
  return {x, y};
}
}  // namespace

std::vector<std::pair<i64, i64>> two_square_representations(u64 n) {
  // Gaussian-integer construction from the factorization; returns all ordered
  // signed pairs, so the count equals r2(n).
  std::vector<std::pair<i64, i64>> out;
  if (n == 0) { out.emplace_back(0, 0); return out; }
  Factorization f = factorize(static_cast<i64>(n));
  // start with units applied later; build the set of Gaussian products z with
  // |z|^2 = n up to units
  struct G { i64 re, im; };
  std::vector<G> zs{{1, 0}};
  for (auto& [p, e] : f.pairs) {
    if (p % 4 == 3) {
      if (e & 1) return {};
      i64 pe = 1;
      for (u32 i = 0; i < e / 2; ++i) pe *= static_cast<i64>(p);
      for (auto& z : zs) { z.re *= pe; z.im *= pe; }
    } else if (p == 2) {
      // (1+i)^e up to units
      i64 re = 1, im = 0;
      for (u32 i = 0; i < e; ++i) {
        i64 nr = re - im, ni = re + im;
        re = nr; im = ni;
      }
      for (auto& z : zs) {
        i64 nr = z.re * re - z.im * im, ni = z.re * im + z.im * re;
        z.re = nr; z.im = ni;
      }
    } else {
      auto [a, b] = cornacchia(p);
      // pi = a+bi; choices pi^j * conj(pi)^(e-j)
      std::vector<G> next;
      for (u32 j = 0; j <= e; ++j) {
        i64 re = 1, im = 0;
        for (u32 i = 0; i < j; ++i) {
          i64 nr = re * static_cast<i64>(a) - im * static_cast<i64>(b);
          i64 ni = re * static_cast<i64>(b) + im * static_cast<i64>(a);
          re = nr; im = ni;
        }
        for (u32 i = j; i < e; ++i) {
          i64 nr = re * static_cast<i64>(a) + im * static_cast<i64>(b);
          i64 ni = -re * static_cast<i64>(b) + im * static_cast<i64>(a);
          re = nr; im = ni;
        }
        for (auto& z : zs) next.push_back({z.re * re - z.im * im, z.re * im + z.im * re});
      }
      zs = std::move(next);
    }
  }
  // apply units i^k and dedupe
  std::vector<std::pair<i64, i64>> all;
  for (auto& z : zs) {
    i64 a = z.re, b = z.im;
    all.emplace_back(a, b);
    all.emplace_back(-b, a);
    all.emplace_back(-a, -b);
    all.emplace_back(b, -a);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace isocount::numtheory
