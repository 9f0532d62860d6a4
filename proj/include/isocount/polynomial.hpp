#pragma once
// Dense integer polynomials (constant term first) and exact rational root
// finding by divisor enumeration.

#include <gmpxx.h>

#include <vector>

namespace isocount::isogeny {

struct IntPolynomial {
  std::vector<mpz_class> c;  // c[i] multiplies t^i; normalized: no leading zeros

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) {
    normalize();
  }
  static IntPolynomial from_ll(const std::vector<long long>& v);

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  // sum_i c[i] p^i q^(deg - i); equals q^deg * eval(p/q)
  mpz_class eval_homogeneous(const mpz_class& p, const mpz_class& q) const;
};

// distinct rational roots, sorted ascending; throws on the zero polynomial
std::vector<mpq_class> rational_roots(const IntPolynomial& poly);

}  // namespace isocount::isogeny
