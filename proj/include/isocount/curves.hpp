#pragma once
// Short Weierstrass curves y^2 = x^3 + Ax + B over Q with exact arithmetic:
// naive height, j-invariant, minimal-model reduction, quadratic twists and
// the chord-tangent group law (used for torsion validation).

#include <gmpxx.h>

#include <cstdint>

namespace isocount::curves {

struct Curve {
  mpz_class A, B;  // invariant: 4A^3 + 27B^2 != 0
};

// throws std::domain_error when 4A^3+27B^2 = 0
Curve make_curve(const mpz_class& A, const mpz_class& B);

mpz_class naive_height(const Curve& c);     // max(|A|^3, B^2)
mpq_class j_invariant(const Curve& c);      // 1728*4A^3/(4A^3+27B^2)

// minimal: no prime p with p^12 | gcd(A^3, B^2), i.e. p^4|A and p^6|B
bool is_minimal(const Curve& c);
Curve minimize(const mpz_class& A, const mpz_class& B);

// quadratic twist by squarefree d: (d^2 A, d^3 B), returned minimized
Curve twist(const Curve& c, const mpz_class& d);

// rational-coefficient model; the integral Curve embeds trivially.  The group
// law works over any exact rational model (torsion checks need e.g.
// y^2 = x^3 - 1/108).
struct RationalCurve {
  mpq_class A, B;
};

struct CurvePoint {
  bool infinity = true;
  mpq_class x, y;
  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(const mpq_class& x, const mpq_class& y) {
    return CurvePoint{false, x, y};
  }
  bool operator==(const CurvePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

bool on_curve(const RationalCurve& c, const CurvePoint& p);
CurvePoint negate(const CurvePoint& p);
CurvePoint add(const RationalCurve& c, const CurvePoint& p, const CurvePoint& q);
// kP by double-and-add; throws std::domain_error if p is not on the curve
CurvePoint scalar_mul(const RationalCurve& c, const CurvePoint& p, std::uint64_t k);
CurvePoint scalar_mul(const Curve& c, const CurvePoint& p, std::uint64_t k);

}  // namespace isocount::curves
