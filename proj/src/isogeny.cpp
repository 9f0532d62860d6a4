#include "isocount/isogeny.hpp"

#include <algorithm>
#include <stdexcept>

#include "isocount/families.hpp"
#include "isocount/numtheory.hpp"

namespace isocount::isogeny {

bool level_supported(unsigned N) {
  return std::find(kSupportedLevels.begin(), kSupportedLevels.end(), N) !=
         kSupportedLevels.end();
}

namespace {

IntPolynomial cubic(const mpz_class& A, const mpz_class& B) {
  return IntPolynomial({B, A, 0, 1});
}

IntPolynomial div_poly3(const mpz_class& A, const mpz_class& B) {
  // 3x^4 + 6Ax^2 + 12Bx - A^2
  return IntPolynomial({-A * A, 12 * B, 6 * A, 0, 3});
}

struct TwoIsogenyStep {
  mpq_class A, B;   // image curve (not reduced)
  mpq_class dual_x; // x-coordinate of the dual kernel on the image
};

TwoIsogenyStep velu2(const mpq_class& A, const mpq_class& B, const mpq_class& x0) {
  mpq_class t = 3 * x0 * x0 + A;
  TwoIsogenyStep s;
  s.A = A - 5 * t;
  s.B = B - 7 * x0 * t;
  s.dual_x = -2 * x0;
  s.A.canonicalize();
  s.B.canonicalize();
  s.dual_x.canonicalize();
  return s;
}

std::vector<mpq_class> cubic_roots(const mpq_class& A, const mpq_class& B) {
  // rational roots of x^3 + Ax + B: clear denominators via x = y/d
  mpz_class d = lcm(A.get_den(), B.get_den());
  mpq_class c1 = A * d * d, c0 = B * d * d * d;
  c1.canonicalize();
  c0.canonicalize();
  IntPolynomial p({c0.get_num(), c1.get_num(), 0, 1});
  std::vector<mpq_class> out;
  for (auto& y : rational_roots(p)) {
    mpq_class x = y / d;
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<curves::Curve> two_isogenous_curves(const curves::Curve& c) {
  std::vector<curves::Curve> out;
  for (auto& x0 : rational_roots(cubic(c.A, c.B))) {
    // monic integer cubic: rational roots are integers
    mpz_class xz = x0.get_num();
    mpz_class t = 3 * xz * xz + c.A;
    out.push_back(curves::minimize(c.A - 5 * t, c.B - 7 * xz * t));
  }
  return out;
}

bool has_isogeny_routeB(const curves::Curve& c, unsigned N) {
  switch (N) {
    case 2:
      return !rational_roots(cubic(c.A, c.B)).empty();
    case 3:
      return !rational_roots(div_poly3(c.A, c.B)).empty();
    case 4: {
      mpq_class A(c.A), B(c.B);
      for (auto& x0 : cubic_roots(A, B)) {
        TwoIsogenyStep s = velu2(A, B, x0);
        for (auto& x1 : cubic_roots(s.A, s.B))
          if (x1 != s.dual_x) return true;
      }
      return false;
    }
    default:
      throw std::domain_error("has_isogeny_routeB: N must be 2, 3 or 4");
  }
}

namespace {

// j = 0 and j = 1728 are the twist-degenerate fibers; the j-only criterion
// breaks there (quartic/sextic twists), so these columns are decided by
// Route B for N <= 4 and by the frozen fiber twist-class tables otherwise.
bool special_j0(const curves::Curve& c, unsigned N) {
  if (N <= 4) return has_isogeny_routeB(c, N);
  if (N == 5) return false;  // fiber of the X0(5) j-map over 0 has no rational points
  const auto& classes = families::j0_cube_classes(N);
  if (classes.empty()) return false;
  auto cls = numtheory::cube_class(mpq_class(c.B));
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

bool special_j1728(const curves::Curve& c, unsigned N) {
  if (N <= 4) return has_isogeny_routeB(c, N);
  if (N == 5) return false;  // both order-2 elliptic points are conjugate over Q(i)
  const auto& classes = families::j1728_square_classes(N);
  if (classes.empty()) return false;
  auto cls = numtheory::square_class(mpq_class(c.A));
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

}  // namespace

bool has_isogeny(const curves::Curve& c, unsigned N) {
  if (!level_supported(N)) throw std::domain_error("has_isogeny: unsupported level");
  if (c.A == 0) return special_j0(c, N);
  if (c.B == 0) return special_j1728(c, N);
  // j not in {0, 1728}: true iff num_N(t) - j*den_N(t) has a rational root.
  // Cusps are excluded automatically: num and den are coprime, so no root of
  // den can be a root of num - j*den.
  mpq_class j = curves::j_invariant(c);
  const IntPolynomial& num = families::jmap_num(N);
  const IntPolynomial& den = families::jmap_den(N);
  std::vector<mpz_class> coeffs(std::max(num.c.size(), den.c.size()), 0);
  const mpz_class& jn = j.get_num();
  const mpz_class& jd = j.get_den();
  for (std::size_t i = 0; i < num.c.size(); ++i) coeffs[i] = jd * num.c[i];
  for (std::size_t i = 0; i < den.c.size(); ++i) coeffs[i] -= jn * den.c[i];
  IntPolynomial p(std::move(coeffs));
  return !rational_roots(p).empty();
}

}  // namespace isocount::isogeny
