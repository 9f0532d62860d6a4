#pragma once
// Rational cyclic N-isogeny detection, two independent routes:
//   Route A (has_isogeny): rational point search on the j-line fiber of the
//     X0(N) hauptmodul map, with special-case tables over j = 0 and j = 1728.
//   Route B (has_isogeny_routeB): division-polynomial / Velu constructions
//     for N in {2,3,4}, used as a cross-validation oracle.

#include <array>
#include <vector>

#include "isocount/curves.hpp"
#include "isocount/polynomial.hpp"

namespace isocount::isogeny {

inline constexpr std::array<unsigned, 10> kSupportedLevels{2, 3, 4, 5, 6, 8, 9, 12, 16, 18};
bool level_supported(unsigned N);

// one minimized image curve per rational root x0 of x^3+Ax+B
// (2-isogeny with kernel {O, (x0,0)}: image (A-5t, B-7*x0*t), t = 3x0^2+A)
std::vector<curves::Curve> two_isogenous_curves(const curves::Curve& c);

// N=2: rational 2-torsion; N=3: rational root of 3x^4+6Ax^2+12Bx-A^2;
// N=4: chain of two rational 2-isogenies whose composite is cyclic
// (second kernel distinct from the dual kernel x = -2*x0).
bool has_isogeny_routeB(const curves::Curve& c, unsigned N);

// Route A; c must be minimal, N in kSupportedLevels.
bool has_isogeny(const curves::Curve& c, unsigned N);

}  // namespace isocount::isogeny
