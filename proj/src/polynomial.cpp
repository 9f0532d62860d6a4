#include "isocount/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "isocount/numtheory.hpp"

namespace isocount::isogeny {

IntPolynomial IntPolynomial::from_ll(const std::vector<long long>& v) {
  std::vector<mpz_class> c;
  c.reserve(v.size());
  for (long long x : v) c.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  r.canonicalize();
  return r;
}

mpz_class IntPolynomial::eval_homogeneous(const mpz_class& p, const mpz_class& q) const {
  if (c.empty()) return 0;
  // Horner in p with a running power of q
  mpz_class r = c.back();
  mpz_class qpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    r = r * p;
    qpow *= q;
    r += c[i] * qpow;
  }
  return r;
}

std::vector<mpq_class> rational_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<mpq_class> roots;
  std::vector<mpz_class> c = poly.c;
  // roots at zero
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // content removal
  mpz_class content = 0;
  for (auto& x : c) content = gcd(content, x);
  if (content > 1)
    for (auto& x : c) x /= content;

  IntPolynomial p(std::move(c));
  const mpz_class& lead = p.c.back();
  const mpz_class& cst = p.c.front();
  // candidates r/s with r | constant, s | leading; filtered by the classic
  // (r - s) | P(1) and (r + s) | P(-1) divisibility tests
  mpz_class p1 = p.eval(mpz_class(1)), pm1 = p.eval(mpz_class(-1));
  if (p1 == 0) roots.emplace_back(1);
  if (pm1 == 0) roots.emplace_back(-1);

  if (mpz_sizeinbase(cst.get_mpz_t(), 2) > 63 || mpz_sizeinbase(lead.get_mpz_t(), 2) > 63)
    throw std::domain_error("rational_roots: coefficients exceed supported factoring range");
  auto rdivs = numtheory::divisors(mpz_get_ui(mpz_class(abs(cst)).get_mpz_t()));
  auto sdivs = numtheory::divisors(mpz_get_ui(mpz_class(abs(lead)).get_mpz_t()));
  auto divides = [](const mpz_class& d, const mpz_class& v) {
    // d | v with the convention 0 | v iff v = 0
    if (d == 0) return v == 0;
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
  };
  for (auto r : rdivs) {
    for (auto s : sdivs) {
      if (std::gcd(r, s) != 1) continue;
      if (r == 1 && s == 1) continue;  // +-1 handled above
      mpz_class rz(static_cast<unsigned long>(r)), sz(static_cast<unsigned long>(s));
      // root p/q in lowest terms satisfies (p-q) | P(1) and (p+q) | P(-1)
      if (divides(rz - sz, p1) && divides(rz + sz, pm1) &&
          p.eval_homogeneous(rz, sz) == 0)
        roots.emplace_back(mpq_class(rz, sz));
      if (divides(rz + sz, p1) && divides(rz - sz, pm1) &&
          p.eval_homogeneous(-rz, sz) == 0)
        roots.emplace_back(mpq_class(-rz, sz));
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace isocount::isogeny
