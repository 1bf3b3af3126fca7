#include "dedekind/sums.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

void require_argument(const Integer& a, const Integer& b, const char* who) {
  if (b < 1) {
    throw PreconditionViolated(std::string(who) + ": b must be >= 1, got " + b.get_str());
  }
  if (gcd(a, b) != 1) {
    throw NotCoprime(std::string(who) + ": gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
  }
}

Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(v)
                                         : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) {
    return 0;
  }
  Integer floor_x;
  mpz_fdiv_q(floor_x.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(x - floor_x - Rational(1, 2));
}

Rational dedekind_sum_direct(const Integer& a, const Integer& b) {
  require_argument(a, b, "dedekind_sum_direct");
  if (b > kDirectSumLimit) {
    throw std::length_error("dedekind_sum_direct: b = " + b.get_str() +
                            " exceeds the oracle limit");
  }
  const std::uint64_t n = b.get_ui();
  Integer a_mod;
  mpz_fdiv_r(a_mod.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const std::uint64_t am = a_mod.get_ui();

  // ((k/n)) = (2 (k mod n) - n) / (2n) off the multiples of n; the k = n term
  // vanishes. Accumulate the product of numerators over the common 4 n^2.
  __int128 total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t k_res = k % n;
    const std::uint64_t ak_res = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(am) * k % n);
    if (k_res == 0 || ak_res == 0) {
      continue;
    }
    const __int128 left = 2 * static_cast<__int128>(k_res) - static_cast<__int128>(n);
    const __int128 right = 2 * static_cast<__int128>(ak_res) - static_cast<__int128>(n);
    total += left * right;
  }
  return make_rational(12 * from_int128(total), 4 * Integer(b * b));
}

Rational dedekind_sum(const Integer& a_in, const Integer& b_in) {
  require_argument(a_in, b_in, "dedekind_sum");
  Integer a = abs(a_in);
  Integer b = b_in;
  int sign = a_in < 0 ? -1 : 1;
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());

  // S(a, b) = -S(b, a) + (a^2 + b^2 + 1) / (a b) - 3, and S(b, a) = S(b mod a, a).
  Rational acc = 0;
  Integer next;
  while (b > 1) {
    Rational term(a * a + b * b + 1, a * b);
    term.canonicalize();
    term -= 3;
    if (sign > 0) {
      acc += term;
    } else {
      acc -= term;
    }
    mpz_fdiv_r(next.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b = a;
    a = next;
    sign = -sign;
  }
  return acc;
}

Integer smallest_denominator(const Integer& a, const Integer& b) {
  require_argument(a, b, "smallest_denominator");
  return b / gcd(b, a * a + 1);
}

Rational dedekind_sum_decomposed(const Integer& q, const Integer& t, const Integer& a) {
  if (q < 1 || t < 1) {
    throw PreconditionViolated("dedekind_sum_decomposed: q and t must be >= 1");
  }
  if (gcd(t, q) != 1) {
    throw PreconditionViolated("dedekind_sum_decomposed: gcd(t, q) != 1");
  }
  return dedekind_sum_decomposed(q, t, a, mod_inverse(t, q));
}

Rational dedekind_sum_decomposed(const Integer& q, const Integer& t, const Integer& a,
                           const Integer& t_star) {
  if (q < 1 || t < 1) {
    throw PreconditionViolated("dedekind_sum_decomposed: q and t must be >= 1");
  }
  if (gcd(t, q) != 1) {
    throw PreconditionViolated("dedekind_sum_decomposed: gcd(t, q) != 1");
  }
  if (gcd(a, q) != 1) {
    throw PreconditionViolated("dedekind_sum_decomposed: gcd(a, q) != 1");
  }
  if (!mpz_divisible_p(Integer(a * a + 1).get_mpz_t(), t.get_mpz_t())) {
    throw PreconditionViolated("dedekind_sum_decomposed: t does not divide a^2 + 1");
  }
  Integer check;
  mpz_fdiv_r(check.get_mpz_t(), Integer(t * t_star - 1).get_mpz_t(), q.get_mpz_t());
  if (check != 0) {
    throw PreconditionViolated("dedekind_sum_decomposed: t * t_star != 1 mod q");
  }
  const Rational linear = make_rational((q * q - 1) * a, t * q);
  return Rational(linear - dedekind_sum(a * q, t) + dedekind_sum(a * t_star, q));
}

bool dedekind_congruence_holds(const Integer& a, const Integer& b) {
  if (mpz_even_p(b.get_mpz_t())) {
    throw EvenModulus("dedekind_congruence_holds: b = " + b.get_str() + " is even");
  }
  require_argument(a, b, "dedekind_congruence_holds");
  const Rational scaled = b * dedekind_sum(a, b);
  if (scaled.get_den() != 1) {
    return false;
  }
  const Integer diff = scaled.get_num() - (b + 1 - 2 * jacobi(a, b));
  return mpz_divisible_ui_p(diff.get_mpz_t(), 8) != 0;
}

bool integer_scaling_check(const Integer& a, const Integer& b) {
  if (a < 1) {
    throw PreconditionViolated("integer_scaling_check: a must be >= 1");
  }
  const Rational scaled = a * dedekind_sum(b, a);
  return scaled.get_den() == 1;
}

ResidueSumTable::ResidueSumTable(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) {
    throw PreconditionViolated("ResidueSumTable: modulus must be >= 1");
  }
  const Integer m = static_cast<unsigned long>(modulus);
  scaled_.resize(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) {
    const Integer residue = static_cast<unsigned long>(r);
    if (gcd(residue, m) != 1) {
      continue;
    }
    const Rational v = m * dedekind_sum(residue, m);
    scaled_[r] = v.get_num();
  }
}

const Integer& ResidueSumTable::scaled(std::uint64_t r) const {
  r %= modulus_;
  if (std::gcd(r, modulus_) != 1) {
    throw NotCoprime("ResidueSumTable: residue " + std::to_string(r) + " shares a factor with " +
                     std::to_string(modulus_));
  }
  return scaled_[r];
}

Rational ResidueSumTable::value(std::uint64_t r) const {
  return make_rational(scaled(r), static_cast<unsigned long>(modulus_));
}

}  // namespace dedekind
