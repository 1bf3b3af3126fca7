#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dedekind {

/// Arbitrary-precision signed integer. Every value that can grow with the
/// search (a, b, numerators, moduli) is carried in this type.
using Integer = mpz_class;

/// Prime factorization as (prime, exponent) pairs with strictly increasing
/// primes. The empty list factors 1.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& x, const Integer& y);

/// The unique u in [0, m) with x*u = 1 mod m. Returns 0 for m = 1.
/// Throws NotCoprime if gcd(x, m) != 1, PreconditionViolated if m < 1.
Integer mod_inverse(const Integer& x, const Integer& m);

/// Jacobi symbol (a|b) for odd b >= 1. Throws EvenModulus for even b.
int jacobi(const Integer& a, const Integer& b);

/// Trial division up to sqrt(n). Throws PreconditionViolated for n = 0.
Factorization factorize(std::uint64_t n);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// All x with 0 <= x <= t/2 and x^2 + 1 = 0 mod t, ascending.
///
/// Roots are found per prime power and glued together by CRT. The list is
/// empty exactly when 4 | t or some prime p = 3 mod 4 divides t. By
/// convention t = 1 yields {0}.
std::vector<std::uint64_t> sqrt_minus_one(std::uint64_t t);

namespace detail {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// A root of x^2 = -1 mod p for a prime p = 1 mod 4.
std::uint64_t sqrt_minus_one_prime(std::uint64_t p);

/// Below this prime, roots mod p are found by scanning.
inline constexpr std::uint64_t kScanRootLimit = 64;

}  // namespace detail

}  // namespace dedekind
