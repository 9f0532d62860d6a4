#include "isocount/curves.hpp"

#include <stdexcept>

#include "isocount/numtheory.hpp"

namespace isocount::curves {

Curve make_curve(const mpz_class& A, const mpz_class& B) {
  mpz_class disc = 4 * A * A * A + 27 * B * B;
  if (disc == 0) throw std::domain_error("make_curve: singular (4A^3+27B^2 = 0)");
  return Curve{A, B};
}

mpz_class naive_height(const Curve& c) {
  mpz_class a3 = abs(c.A);
  a3 = a3 * a3 * a3;
  mpz_class b2 = c.B * c.B;
  return a3 > b2 ? a3 : b2;
}

mpq_class j_invariant(const Curve& c) {
  mpz_class fourA3 = 4 * c.A * c.A * c.A;
  mpq_class j(1728 * fourA3, fourA3 + 27 * c.B * c.B);
  j.canonicalize();
  return j;
}

bool is_minimal(const Curve& c) {
  // p^12 | gcd(A^3,B^2) iff p^4|A and p^6|B (with the A=0/B=0 conventions)
  using numtheory::factorize;
  if (c.A == 0) {
    for (auto& [p, e] : factorize(c.B).pairs)
      if (e >= 6) return false;
    return true;
  }
  if (c.B == 0) {
    for (auto& [p, e] : factorize(c.A).pairs)
      if (e >= 4) return false;
    return true;
  }
  mpz_class g = gcd(c.A, c.B);
  if (g == 1 || g == -1) return true;
  for (auto& [p, e] : factorize(g).pairs) {
    if (e < 4) continue;
    if (numtheory::val_p(c.A, p) >= 4 && numtheory::val_p(c.B, p) >= 6) return false;
  }
  return true;
}

Curve minimize(const mpz_class& A, const mpz_class& B) {
  Curve c = make_curve(A, B);
  if (c.A == 0) {
    for (auto& [p, e] : numtheory::factorize(c.B).pairs) {
      long k = e / 6;
      if (k > 0) {
        mpz_class p6;
        mpz_ui_pow_ui(p6.get_mpz_t(), p, 6 * k);
        c.B /= p6;
      }
    }
    return c;
  }
  if (c.B == 0) {
    for (auto& [p, e] : numtheory::factorize(c.A).pairs) {
      long k = e / 4;
      if (k > 0) {
        mpz_class p4;
        mpz_ui_pow_ui(p4.get_mpz_t(), p, 4 * k);
        c.A /= p4;
      }
    }
    return c;
  }
  mpz_class g = gcd(c.A, c.B);
  if (g == 1 || g == -1) return c;
  for (auto& [p, e] : numtheory::factorize(g).pairs) {
    long va = numtheory::val_p(c.A, p), vb = numtheory::val_p(c.B, p);
    long k = std::min(va / 4, vb / 6);
    if (k > 0) {
      mpz_class p4, p6;
      mpz_ui_pow_ui(p4.get_mpz_t(), p, 4 * k);
      mpz_ui_pow_ui(p6.get_mpz_t(), p, 6 * k);
      c.A /= p4;
      c.B /= p6;
    }
  }
  return c;
}

Curve twist(const Curve& c, const mpz_class& d) {
  if (d == 0) throw std::domain_error("twist: d = 0");
  return minimize(d * d * c.A, d * d * d * c.B);
}

bool on_curve(const RationalCurve& c, const CurvePoint& p) {
  if (p.infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + c.A * p.x + c.B;
}

CurvePoint negate(const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y);
}

CurvePoint add(const RationalCurve& c, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x) {
    if (p.y != q.y || p.y == 0) return CurvePoint::at_infinity();
    // doubling
    mpq_class lam = (3 * p.x * p.x + c.A) / (2 * p.y);
    mpq_class x3 = lam * lam - 2 * p.x;
    mpq_class y3 = lam * (p.x - x3) - p.y;
    x3.canonicalize();
    y3.canonicalize();
    return CurvePoint::affine(x3, y3);
  }
  mpq_class lam = (q.y - p.y) / (q.x - p.x);
  mpq_class x3 = lam * lam - p.x - q.x;
  mpq_class y3 = lam * (p.x - x3) - p.y;
  x3.canonicalize();
  y3.canonicalize();
  return CurvePoint::affine(x3, y3);
}

CurvePoint scalar_mul(const RationalCurve& c, const CurvePoint& p, std::uint64_t k) {
  if (!on_curve(c, p)) throw std::domain_error("scalar_mul: point not on curve");
  CurvePoint acc = CurvePoint::at_infinity();
  CurvePoint base = p;
  while (k) {
    if (k & 1) acc = add(c, acc, base);
    base = add(c, base, base);
    k >>= 1;
  }
  return acc;
}

CurvePoint scalar_mul(const Curve& c, const CurvePoint& p, std::uint64_t k) {
  return scalar_mul(RationalCurve{mpq_class(c.A), mpq_class(c.B)}, p, k);
}

}  // namespace isocount::curves
