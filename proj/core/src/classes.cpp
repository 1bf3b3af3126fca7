#include "dedekind/classes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

void require_q(std::uint64_t q, const char* who) {
  if (q < 2) {
    throw PreconditionViolated(std::string(who) + ": q must be >= 2, got " + std::to_string(q));
  }
}

// Residues of k mod 3, 4 and 8 decide admissibility; k mod 24 carries all.
bool admissible_residue(std::uint64_t k24, std::uint64_t q) {
  if (q % 3 != 0 && k24 % 3 != 0) {
    return false;
  }
  if (q % 2 == 1) {
    if (q % 4 == 3) return k24 % 4 == 2;
    if (is_perfect_square(q)) return k24 % 8 == 0;
    return k24 % 4 == 0;
  }
  return true;
}

}  // namespace

std::uint64_t class_modulus(std::uint64_t q) {
  require_q(q, "class_modulus");
  std::uint64_t sq = 0;
  std::uint64_t m = 0;
  if (__builtin_mul_overflow(q, q, &sq) || __builtin_mul_overflow(sq - 1, q, &m)) {
    throw std::overflow_error("class_modulus: (q^2 - 1) q overflows 64 bits for q = " +
                              std::to_string(q));
  }
  return m;
}

bool is_perfect_square(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r * r == n;
}

bool admissible(const Integer& k, std::uint64_t q) {
  require_q(q, "admissible");
  if (gcd(k, Integer(static_cast<unsigned long>(q))) != 1) {
    throw NotCoprime("admissible: gcd(" + k.get_str() + ", " + std::to_string(q) + ") != 1");
  }
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), 24);
  return admissible_residue(r.get_ui(), q);
}

std::vector<ClassRep> admissible_classes(std::uint64_t q) {
  const std::uint64_t m = class_modulus(q);
  std::vector<ClassRep> out;
  for (std::uint64_t k = 1; k <= m / 2; ++k) {
    if (std::gcd(k, q) == 1 && admissible_residue(k % 24, q)) {
      out.push_back(ClassRep{q, k, 2 * k == m});
    }
  }
  return out;
}

std::uint64_t class_count(std::uint64_t q) {
  const std::uint64_t m = class_modulus(q);
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= m / 2; ++k) {
    if (std::gcd(k, q) == 1 && admissible_residue(k % 24, q)) {
      ++count;
    }
  }
  return count;
}

SignedClass normalize(const Integer& k_raw, std::uint64_t q) {
  const std::uint64_t m = class_modulus(q);
  if (gcd(k_raw, Integer(static_cast<unsigned long>(q))) != 1) {
    throw NotCoprime("normalize: gcd(" + k_raw.get_str() + ", " + std::to_string(q) + ") != 1");
  }
  const std::uint64_t r = mpz_fdiv_ui(k_raw.get_mpz_t(), m);
  if (r <= m / 2) {
    return SignedClass{ClassRep{q, r, 2 * r == m}, 1};
  }
  return SignedClass{ClassRep{q, m - r, false}, -1};
}

}  // namespace dedekind
