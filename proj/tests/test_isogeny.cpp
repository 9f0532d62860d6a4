#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "isocount/curves.hpp"
#include "isocount/families.hpp"
#include "isocount/isogeny.hpp"
#include "oracles.hpp"

using namespace isocount;
using namespace isocount::isogeny;
using curves::Curve;
using curves::make_curve;

TEST_CASE("rational_roots basics") {
  CHECK(rational_roots(IntPolynomial::from_ll({-1, 0, 1})) ==
        std::vector<mpq_class>{-1, 1});
  CHECK(rational_roots(IntPolynomial::from_ll({-3, 2})) ==
        std::vector<mpq_class>{mpq_class(3, 2)});
  CHECK(rational_roots(IntPolynomial::from_ll({1, 0, 1})).empty());
  CHECK_THROWS_AS(rational_roots(IntPolynomial{}), std::domain_error);
  // roots at 0 and with content
  CHECK(rational_roots(IntPolynomial::from_ll({0, 0, -6, 6})) ==
        std::vector<mpq_class>{0, 1});
  // (2x-1)(3x+2)(x^2+5)
  IntPolynomial p = IntPolynomial::from_ll({-10, 5, -48, 5, 6});
  // expand (2x-1)(3x+2) = 6x^2+x-2; times (x^2+5) = 6x^4+x^3+28x^2+5x-10
  p = IntPolynomial::from_ll({-10, 5, 28, 1, 6});
  auto r = rational_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == mpq_class(-2, 3));
  CHECK(r[1] == mpq_class(1, 2));
}

TEST_CASE("two_isogenous_curves") {
  // y^2 = x^3 - x: full rational 2-torsion, three image curves
  auto im = two_isogenous_curves(make_curve(-1, 0));
  CHECK(im.size() == 3);
  // y^2 = x^3 + x + 1: no rational 2-torsion
  CHECK(two_isogenous_curves(make_curve(1, 1)).empty());
  // y^2 = x^3 + 4x, kernel x0 = 0: image minimizes to (-1, 0), j = 1728
  auto im2 = two_isogenous_curves(make_curve(4, 0));
  REQUIRE(im2.size() == 1);
  CHECK(im2[0].A == -1);
  CHECK(im2[0].B == 0);
  CHECK(curves::j_invariant(im2[0]) == 1728);
  // cross-route consistency: source and image j both lie on the level-2 line
  for (auto& c : im) {
    bool hit = false;
    mpq_class j = curves::j_invariant(c);
    const auto& num = families::jmap_num(2);
    const auto& den = families::jmap_den(2);
    std::vector<mpz_class> co(num.c.size());
    for (std::size_t i = 0; i < num.c.size(); ++i) co[i] = j.get_den() * num.c[i];
    for (std::size_t i = 0; i < den.c.size(); ++i) co[i] -= j.get_num() * den.c[i];
    hit = !rational_roots(IntPolynomial(std::move(co))).empty();
    CHECK(hit);
  }
}

TEST_CASE("routeB examples") {
  CHECK(has_isogeny_routeB(make_curve(0, 16), 3));
  CHECK_FALSE(has_isogeny_routeB(make_curve(1, 1), 2));
  CHECK(has_isogeny_routeB(make_curve(0, 1), 2));  // root x = -1
  // y^2 = x^3 - x admits three 2-isogenies but no cyclic 4 (chain oracle)
  CHECK_FALSE(has_isogeny_routeB(make_curve(-1, 0), 4));
  CHECK_FALSE(oracles::chain_has_isogeny(-1, 0, 4));
  CHECK(has_isogeny_routeB(make_curve(1, 0), 4));  // (1,0) -> (-4,0) chain
  CHECK_THROWS_AS(has_isogeny_routeB(make_curve(1, 1), 5), std::domain_error);
}

TEST_CASE("has_isogeny examples") {
  CHECK(has_isogeny(make_curve(0, 16), 3));
  CHECK(has_isogeny(make_curve(0, 1), 2));
  CHECK_FALSE(has_isogeny(make_curve(1, 1), 2));
  CHECK_THROWS_AS(has_isogeny(make_curve(1, 1), 7), std::domain_error);
  CHECK_THROWS_AS(has_isogeny(make_curve(1, 1), 11), std::domain_error);
}

TEST_CASE("route agreement, exhaustive below height 2e4") {
  for (long A = -27; A <= 27; ++A)
    for (long B = -141; B <= 141; ++B) {
      if (4 * mpz_class(A) * A * A + 27 * mpz_class(B) * B == 0) continue;
      if (mpz_class(A) * A * A > 20000 || mpz_class(B) * B > 20000) continue;
      Curve c = make_curve(A, B);
      if (!curves::is_minimal(c)) continue;
      for (unsigned N : {2u, 3u, 4u})
        CHECK(has_isogeny(c, N) == has_isogeny_routeB(c, N));
    }
}

TEST_CASE("agreement with the independent chain oracle, all levels") {
  for (long A = -12; A <= 12; ++A)
    for (long B = -44; B <= 44; ++B) {
      if (4 * mpz_class(A) * A * A + 27 * mpz_class(B) * B == 0) continue;
      if (mpz_class(A) * A * A > 2000 || mpz_class(B) * B > 2000) continue;
      Curve c = make_curve(A, B);
      if (!curves::is_minimal(c)) continue;
      for (unsigned N : {2u, 3u, 4u, 6u, 8u, 9u, 12u, 16u, 18u})
        CHECK(has_isogeny(c, N) == oracles::chain_has_isogeny(A, B, N));
    }
}

TEST_CASE("twist invariance") {
  // j is a twist invariant, so detection away from j = 0, 1728 must agree;
  // memoize per (j, N) to keep the exhaustive sweep fast
  std::map<std::pair<std::pair<mpz_class, mpz_class>, unsigned>, bool> memo;
  auto detect = [&](const Curve& c, unsigned N) {
    mpq_class j = curves::j_invariant(c);
    auto key = std::make_pair(std::make_pair(j.get_num(), j.get_den()), N);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = has_isogeny(c, N);
    memo.emplace(key, v);
    return v;
  };
  for (long A = -21; A <= 21; ++A)
    for (long B = -99; B <= 99; ++B) {
      if (A == 0 || B == 0) continue;
      if (4 * mpz_class(A) * A * A + 27 * mpz_class(B) * B == 0) continue;
      if (mpz_class(A) * A * A > 10000 || mpz_class(B) * B > 10000) continue;
      Curve c = make_curve(A, B);
      if (!curves::is_minimal(c)) continue;
      for (long d : {-5, -3, -2, 2, 3, 5}) {
        Curve t = curves::twist(c, d);
        for (unsigned N : kSupportedLevels)
          CHECK(detect(c, N) == detect(t, N));
      }
    }
}

TEST_CASE("divisibility monotonicity below height 1e5") {
  // has(kN) implies has(N) along 6->2,3; 4->2; 8->4; 9->3; 12->6; 16->8; 18->9
  for (long A = -46; A <= 46; ++A)
    for (long B = -316; B <= 316; ++B) {
      if (4 * mpz_class(A) * A * A + 27 * mpz_class(B) * B == 0) continue;
      if (mpz_class(A) * A * A > 100000 || mpz_class(B) * B > 100000) continue;
      Curve c = make_curve(A, B);
      if (!curves::is_minimal(c)) continue;
      std::map<unsigned, bool> has;
      for (unsigned N : kSupportedLevels) has[N] = has_isogeny(c, N);
      if (has[6]) { CHECK(has[2]); CHECK(has[3]); }
      if (has[4]) CHECK(has[2]);
      if (has[8]) CHECK(has[4]);
      if (has[9]) CHECK(has[3]);
      if (has[12]) CHECK(has[6]);
      if (has[16]) CHECK(has[8]);
      if (has[18]) CHECK(has[9]);
      // every j = 0 curve has a 3-isogeny (kernel polynomial x)
      if (A == 0) CHECK(has[3]);
    }
}
