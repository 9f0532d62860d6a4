#pragma once
// Exact integer and rational arithmetic services: factorization, p-adic
// valuations, power-free decompositions, and the multiplicative functions
// B^(4) and r2 used by the lattice/summatory engines.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace isocount::numtheory {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Factorization {
  int sign = 1;                              // sign of n
  std::vector<std::pair<u64, u32>> pairs;  // (prime, exponent), primes increasing
  mpz_class reconstruct_abs() const;         // product p^e = |n|
};

// Smallest-prime-factor sieve shared by all factorizations.  Built once on
// first use (default bound 10^7); safe to rebuild explicitly before any
// concurrent use.  Inputs above the bound fall back to Pollard rho.
void ensure_spf(std::size_t bound = 10'000'000);

Factorization factorize(i64 n);              // n != 0, |n| < 2^63
Factorization factorize(const mpz_class& n); // must fit in 64 bits

bool is_prime(u64 n);

// p-adic valuation of a nonzero rational; val_p(q1*q2) = val_p(q1)+val_p(q2).
long val_p(const mpq_class& q, u64 p);
long val_p(const mpz_class& z, u64 p);       // z != 0

// n = core * d^k with core k-th-power free and d maximal (core keeps the sign).
std::pair<mpz_class, mpz_class> power_free_decompose(const mpz_class& n, unsigned k);

// B^(4)(n) = B(n^4): multiplicative, p^k -> 4k+1 for p = 1 mod 4, else 1.
u64 b_four(u64 n);

// number of ordered signed pairs (x,y) with x^2 + y^2 = n, via the
// factorization formula (0 when a prime 3 mod 4 divides n to an odd power).
u64 r2(u64 n);

// condition (dagger): no prime p has p^n dividing every |a_i|^{p_i}.
// Throws std::domain_error on the all-zero tuple.
bool is_dagger_minimal(std::span<const mpz_class> values,
                       std::span<const unsigned> powers, unsigned n);
bool is_dagger_minimal(std::span<const i64> values,
                       std::span<const unsigned> powers, unsigned n);

// ---- small helpers shared by the counting engines ----
bool is_squarefree(u64 n);                   // n >= 1
u64 radical(u64 n);
std::vector<u64> divisors(u64 n);            // unsorted
// class of q modulo rational cubes (sign dropped: -1 is a cube)
u64 cube_class(const mpq_class& q);          // q != 0
// class of q modulo rational squares, signed
i64 square_class(const mpq_class& q);        // q != 0

// all (x,y) in Z^2 with x^2 + y^2 = n, via Gaussian factorization
// (Cornacchia for the prime splittings); ordered+signed, i.e. r2(n) entries.
std::vector<std::pair<i64, i64>> two_square_representations(u64 n);

}  // namespace isocount::numtheory
