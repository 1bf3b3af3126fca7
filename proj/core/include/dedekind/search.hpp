#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dedekind/arith.hpp"
#include "dedekind/classes.hpp"
#include "dedekind/sums.hpp"

namespace dedekind {

/// A modulus t with a root a1 of x^2 = -1 mod t, 0 <= a1 <= t/2.
struct RootPair {
  std::uint64_t t = 1;
  std::uint64_t a1 = 0;

  friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

/// An explicit pair (a, b) with b = q(a^2+1)/t and S(a, b) = value, whose
/// numerator lies in the class sign * class_k mod (q^2-1)q.
struct Witness {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  Integer a;
  Integer b;
  Rational value;
  std::uint64_t class_k = 0;
  int sign = 1;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchConfig {
  std::uint64_t q = 2;
  std::uint64_t max_sums = 10'000'000;
  std::uint64_t max_t = 10'000'000;
  unsigned jobs = 1;
  bool deterministic = true;
};

struct CoverageReport {
  std::uint64_t q = 0;
  std::uint64_t modulus = 0;
  std::uint64_t predicted = 0;
  /// Keyed by class_k; its key set is the set of found classes.
  std::map<std::uint64_t, Witness> witnesses;
  std::uint64_t sums_computed = 0;
  std::uint64_t max_t_reached = 0;
  bool complete = false;

  std::uint64_t found_count() const { return witnesses.size(); }
  std::vector<std::uint64_t> found() const;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Lazily walks the RootPairs with t <= max_t and gcd(t, q) = 1 in (t, a1)
/// order. A t with several roots is yielded once per root.
class RootPairStream {
 public:
  RootPairStream(std::uint64_t q, std::uint64_t max_t);

  std::optional<RootPair> next();

 private:
  std::uint64_t q_;
  std::uint64_t max_t_;
  std::uint64_t t_ = 0;
  std::vector<std::uint64_t> roots_;
  std::size_t index_ = 0;
};

std::vector<RootPair> enumerate_root_pairs(std::uint64_t q, std::uint64_t max_t);

/// One witness per a = a1 + t j, j = 0..q-1, with a >= 1 and gcd(a, q) = 1,
/// ascending in j. Values come from dedekind_sum_decomposed.
std::vector<Witness> candidates_for_pair(std::uint64_t q, const RootPair& pair);

/// Streams candidates over enumerate_root_pairs until every admissible class
/// has a witness or a budget runs out (reported through complete = false).
///
/// With deterministic set (or jobs = 1) the result is the one produced by a
/// single pass in (t, a1, j) order, whatever the worker count: the first
/// witness per class and sums_computed are reproducible. Otherwise workers
/// share an insert-only found set and race for first witnesses.
CoverageReport run_search(const SearchConfig& config);

/// a' = a + m t q, b' = q(a'^2+1)/t, value' = value + (q^2-1) m. a' keeps
/// its sign, so the numerator moves by exactly (q^2-1) q m.
Witness shift_witness(const Witness& w, const Integer& m);

/// The same class evidence with a >= 1, using S(-a, b) = -S(a, b).
Witness with_positive_a(const Witness& w);

struct VerifyResult {
  bool ok = true;
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Checks a single witness end to end. With strict_congruences the numerator
/// is also checked against Dedekind's mod-8 congruence when b is odd.
VerifyResult verify_witness(const Witness& w, bool strict_congruences = false);

/// Re-validates every witness and the report header.
VerifyResult verify_report(const CoverageReport& report,
                           bool strict_congruences = false);

}  // namespace dedekind
