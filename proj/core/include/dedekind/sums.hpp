#pragma once

// Normalized Dedekind sums S(a, b) = 12 s(a, b), evaluated exactly.
//
// Three routes are provided and are expected to agree:
//   dedekind_sum_direct      the defining sum over the sawtooth, O(b)
//   dedekind_sum             reciprocity alternating with reduction mod b
//   dedekind_sum_decomposed  S(a, q(a^2+1)/t) assembled from S(aq, t), S(at*, q)
//                            and a rational linear term

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dedekind/arith.hpp"

namespace dedekind {

/// Exact fraction; gmpxx keeps results of arithmetic in canonical form.
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den", or "num" when den = 1.
std::string to_string(const Rational& r);

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// Largest b accepted by dedekind_sum_direct.
inline constexpr std::uint64_t kDirectSumLimit = 1'000'000;

/// S(a, b) by the definition. Throws NotCoprime, PreconditionViolated for
/// b < 1, and std::length_error for b > kDirectSumLimit.
Rational dedekind_sum_direct(const Integer& a, const Integer& b);

/// S(a, b) in O(log b) steps. Throws NotCoprime or PreconditionViolated.
Rational dedekind_sum(const Integer& a, const Integer& b);

/// The reduced denominator of S(a, b), b / gcd(b, a^2 + 1).
Integer smallest_denominator(const Integer& a, const Integer& b);

/// S(a, b) for b = q(a^2+1)/t, computed as
///   (q^2 - 1) a / (t q) - S(a q, t) + S(a t*, q),   t t* = 1 mod q.
/// Requires gcd(t, q) = 1, gcd(a, q) = 1 and t | a^2 + 1; otherwise throws
/// PreconditionViolated naming the condition.
Rational dedekind_sum_decomposed(const Integer& q, const Integer& t, const Integer& a);

/// Same, with a caller-chosen inverse representative t_star (any integer
/// with t * t_star = 1 mod q).
Rational dedekind_sum_decomposed(const Integer& q, const Integer& t, const Integer& a,
                           const Integer& t_star);

/// Dedekind's congruence b S(a,b) = b + 1 - 2 (a|b) mod 8 for odd b.
bool dedekind_congruence_holds(const Integer& a, const Integer& b);

/// Whether a S(b, a) is an integer, for a >= 1 coprime to b.
bool integer_scaling_check(const Integer& a, const Integer& b);

/// Precomputed m * S(r, m) (always an integer) for every residue r mod m
/// coprime to m. Immutable after construction and safe to share.
class ResidueSumTable {
 public:
  explicit ResidueSumTable(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }

  /// m * S(r, m); r is reduced mod m first.
  const Integer& scaled(std::uint64_t r) const;

  Rational value(std::uint64_t r) const;

 private:
  std::uint64_t modulus_;
  std::vector<Integer> scaled_;
};

}  // namespace dedekind
