#pragma once

#include <cstdint>
#include <vector>

#include "dedekind/arith.hpp"

namespace dedekind {

/// (q^2 - 1) q. Throws PreconditionViolated for q < 2 and std::overflow_error
/// when the modulus does not fit 64 bits.
std::uint64_t class_modulus(std::uint64_t q);

/// Unordered pair {k, M - k} of residues mod M = (q^2 - 1) q, stored by its
/// representative 1 <= k <= M/2.
struct ClassRep {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  bool self_paired = false;

  friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

struct SignedClass {
  ClassRep rep;
  int sign = 1;

  friend bool operator==(const SignedClass&, const SignedClass&) = default;
};

bool is_perfect_square(std::uint64_t n);

/// The congruence conditions a numerator k of a value k/q must satisfy:
///   3 !| q          =>  k = 0 mod 3
///   q = 3 mod 4     =>  k = 2 mod 4
///   q an odd square =>  k = 0 mod 8
///   other odd q     =>  k = 0 mod 4
/// Throws NotCoprime if gcd(k, q) != 1 and PreconditionViolated if q < 2.
bool admissible(const Integer& k, std::uint64_t q);

/// Every admissible ClassRep for q, ascending by k.
std::vector<ClassRep> admissible_classes(std::uint64_t q);

std::uint64_t class_count(std::uint64_t q);

/// Folds k_raw mod M to its pair representative. sign is +1 when
/// k_raw = k mod M and -1 when k_raw = M - k; self-paired classes get +1.
SignedClass normalize(const Integer& k_raw, std::uint64_t q);

}  // namespace dedekind
