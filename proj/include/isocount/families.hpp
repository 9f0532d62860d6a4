#pragma once
// Registry of the parametrized twist families over the genus-zero modular
// curves: coefficients f_N, g_N, hauptmodul j-maps, the (r,s,m,n,h,w)
// invariant table, and the twist-class tables for the fibers over j=0/1728.
// All constants are frozen after validation (see tests/test_families.cpp).

#include <iosfwd>
#include <tuple>
#include <vector>

#include "isocount/polynomial.hpp"

#include <gmpxx.h>

namespace isocount::families {

struct FamilySpec {
  unsigned N = 0;
  isogeny::IntPolynomial f, g;  // numerators; evaluate as f/f_den, g/g_den
  mpz_class f_den = 1, g_den = 1;
  unsigned r = 0, s = 0, m = 0, n = 0, h = 0, w = 0;
  isogeny::IntPolynomial jmap_num, jmap_den;           // coprime
  std::vector<unsigned long long> j0_cube_classes;     // twist classes over j=0
  std::vector<long long> j1728_square_classes;         // over j=1728, signed
};

// family levels: {3,4,6,8,9,12,16,18}; N=7 rejected with a specific message
bool family_supported(unsigned N);
const FamilySpec& family(unsigned N);

// (A,B) = (u^2 f_N(t), u^3 g_N(t)); throws on degenerate t (cusp fiber)
std::pair<mpq_class, mpq_class> family_curve(unsigned N, const mpq_class& u,
                                             const mpq_class& t);

// (r, s, m, n, h, w)
std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned, unsigned>
table2_invariants(unsigned N);

// j-map of the level-N hauptmodul line; defined for all ten supported levels
// (for N = 2, 5 this is the X0(N) map; there is no family there).
mpq_class jmap(unsigned N, const mpq_class& t);
const isogeny::IntPolynomial& jmap_num(unsigned N);
const isogeny::IntPolynomial& jmap_den(unsigned N);

const std::vector<unsigned long long>& j0_cube_classes(unsigned N);
const std::vector<long long>& j1728_square_classes(unsigned N);

// audit dump: one polynomial per line, coefficients space-separated,
// constant term first
void dump_registry(std::ostream& os);

}  // namespace isocount::families
