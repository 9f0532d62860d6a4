#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "isocount/numtheory.hpp"
#include "oracles.hpp"

using namespace isocount::numtheory;

TEST_CASE("factorize basics") {
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(1).sign == 1);
  auto f12 = factorize(12);
  REQUIRE(f12.pairs.size() == 2);
  CHECK(f12.pairs[0] == std::pair<u64, u32>{2, 2});
  CHECK(f12.pairs[1] == std::pair<u64, u32>{3, 1});
  auto f = factorize(10000);
  REQUIRE(f.pairs.size() == 2);
  CHECK(f.pairs[0] == std::pair<u64, u32>{2, 4});
  CHECK(f.pairs[1] == std::pair<u64, u32>{5, 4});
  CHECK(factorize(-12).sign == -1);
  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize agrees with trial division and reconstructs") {
  for (i64 n = 1; n <= 1000000; ++n) {
    auto f = factorize(n);
    if (n % 9973 == 0) {  // full oracle comparison on a sparse subset
      auto o = oracles::trial_factor(static_cast<u64>(n));
      CHECK(f.pairs == o);
    }
    CHECK(f.reconstruct_abs() == n);
  }
}

TEST_CASE("factorize large inputs via rho") {
  auto f = factorize(static_cast<i64>(1000003) * 1000033);
  REQUIRE(f.pairs.size() == 2);
  CHECK(f.pairs[0].first == 1000003);
  CHECK(f.pairs[1].first == 1000033);
}

TEST_CASE("val_p") {
  CHECK(val_p(mpq_class(8, 3), 2) == 3);
  CHECK(val_p(mpq_class(8, 3), 3) == -1);
  CHECK(val_p(mpq_class(1), 7) == 0);
  CHECK_THROWS_AS(val_p(mpq_class(0), 2), std::domain_error);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    mpq_class q1(static_cast<int>(rng() % 2000) - 1000, 1 + static_cast<int>(rng() % 50));
    mpq_class q2(static_cast<int>(rng() % 2000) - 1000, 1 + static_cast<int>(rng() % 50));
    if (q1 == 0 || q2 == 0) continue;
    q1.canonicalize();
    q2.canonicalize();
    mpq_class pr = q1 * q2;
    pr.canonicalize();
    for (u64 p : {2ull, 3ull, 5ull, 7ull})
      CHECK(val_p(pr, p) == val_p(q1, p) + val_p(q2, p));
  }
}

TEST_CASE("power_free_decompose examples") {
  auto chk = [](i64 n, unsigned k, i64 core, i64 d) {
    auto [c, dd] = power_free_decompose(mpz_class(static_cast<long>(n)), k);
    CHECK(c == core);
    CHECK(dd == d);
  };
  chk(64, 12, 64, 1);
  chk(8192, 12, 2, 2);  // 2^13
  chk(1215, 2, 15, 9);  // 3^5*5
  CHECK_THROWS_AS(power_free_decompose(mpz_class(0), 2), std::domain_error);
  CHECK_THROWS_AS(power_free_decompose(mpz_class(5), 1), std::domain_error);
}

TEST_CASE("power_free_decompose exhaustive") {
  for (i64 an = 1; an <= 100000; ++an) {
    for (unsigned k = 2; k <= 12; ++k) {
      i64 n = (an % 2) ? an : -an;  // alternate signs
      auto [core, d] = power_free_decompose(mpz_class(static_cast<long>(n)), k);
      mpz_class dk;
      mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), k);
      CHECK(core * dk == n);
      for (auto& [p, e] : factorize(core).pairs) CHECK(e < k);
    }
  }
}

TEST_CASE("b_four") {
  CHECK(b_four(1) == 1);
  CHECK(b_four(5) == 5);
  CHECK(b_four(15) == 5);
  CHECK(b_four(25) == 9);
}

TEST_CASE("b_four multiplicative on coprime pairs up to 1e4") {
  for (u64 m = 2; m * 2 <= 10000; ++m)
    for (u64 n = m + 1; m * n <= 10000; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(b_four(m * n) == b_four(m) * b_four(n));
    }
}

TEST_CASE("r2 examples and formula vs circle scan") {
  CHECK(r2(25) == 12);
  CHECK(r2(3) == 0);
  CHECK(r2(1) == 4);
  for (u64 n = 1; n <= 10000; ++n) CHECK(r2(n) == oracles::r2_circle(n));
}

TEST_CASE("gauss circle sanity") {
  // |sum_{n<=T} r2(n) - pi*T| <= C sqrt(T); C = 2.0 fixed from measurement
  for (u64 T : {1000ull, 10000ull, 100000ull}) {
    long double s = 0;
    for (u64 n = 1; n <= T; ++n) s += r2(n);
    long double err = fabsl(s - M_PI * static_cast<long double>(T));
    CHECK(err <= 2.0L * sqrtl(static_cast<long double>(T)));
  }
}

TEST_CASE("dagger minimality") {
  std::vector<i64> v1{1, 1};
  std::vector<unsigned> p1{6, 3};
  CHECK(is_dagger_minimal(std::span<const i64>(v1), std::span<const unsigned>(p1), 12));
  std::vector<i64> v2{4, 16};
  CHECK_FALSE(is_dagger_minimal(std::span<const i64>(v2), std::span<const unsigned>(p1), 12));
  // (2,4,8) with powers (6,6,6): min(6*1, 6*2, 6*3) = 6 < 12, so minimal;
  // frozen from the brute-force valuation oracle
  std::vector<i64> v3{2, 4, 8};
  std::vector<unsigned> p3{6, 6, 6};
  CHECK(is_dagger_minimal(std::span<const i64>(v3), std::span<const unsigned>(p3), 12));
  CHECK(oracles::brute_dagger({2, 4, 8}, {6, 6, 6}, 12));
  std::vector<i64> vz{0, 0};
  CHECK_THROWS_AS(
      is_dagger_minimal(std::span<const i64>(vz), std::span<const unsigned>(p1), 12),
      std::domain_error);
}

TEST_CASE("dagger randomized vs brute oracle") {
  std::mt19937 rng(99);
  std::vector<unsigned> pows{6, 3, 2};
  for (int i = 0; i < 3000; ++i) {
    std::vector<i64> vals(3);
    for (auto& v : vals) v = static_cast<i64>(rng() % 257) - 128;
    if (vals[0] == 0 && vals[1] == 0 && vals[2] == 0) continue;
    CHECK(is_dagger_minimal(std::span<const i64>(vals), std::span<const unsigned>(pows), 12) ==
          oracles::brute_dagger(vals, pows, 12));
  }
}

TEST_CASE("two square representations match r2") {
  for (u64 n = 1; n <= 2000; ++n) {
    auto reps = two_square_representations(n);
    CHECK(reps.size() == r2(n));
    for (auto& [x, y] : reps) CHECK(static_cast<u64>(x * x + y * y) == n);
  }
}

TEST_CASE("cube and square classes") {
  CHECK(cube_class(mpq_class(8)) == 1);
  CHECK(cube_class(mpq_class(-8)) == 1);
  CHECK(cube_class(mpq_class(16)) == 2);
  CHECK(cube_class(mpq_class(2, 27)) == 2);
  CHECK(square_class(mpq_class(8)) == 2);
  CHECK(square_class(mpq_class(-4)) == -1);
  CHECK(square_class(mpq_class(18)) == 2);
}
