#include "dedekind/arith.hpp"

#include <algorithm>

#include "dedekind/errors.hpp"

namespace dedekind {

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer mod_inverse(const Integer& x, const Integer& m) {
  if (m < 1) {
    throw PreconditionViolated("mod_inverse: modulus must be >= 1");
  }
  if (gcd(x, m) != 1) {
    throw NotCoprime("mod_inverse: gcd(" + x.get_str() + ", " + m.get_str() + ") != 1");
  }
  if (m == 1) {
    return 0;
  }
  Integer u;
  mpz_invert(u.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return u;
}

int jacobi(const Integer& a_in, const Integer& b_in) {
  if (b_in < 1 || mpz_even_p(b_in.get_mpz_t())) {
    throw EvenModulus("jacobi: modulus " + b_in.get_str() + " must be odd and positive");
  }
  Integer a;
  Integer b = b_in;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), b.get_mpz_t());
  int result = 1;
  while (a != 0) {
    const auto twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos > 0) {
      mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
      const auto b8 = mpz_fdiv_ui(b.get_mpz_t(), 8);
      if ((twos & 1) && (b8 == 3 || b8 == 5)) {
        result = -result;
      }
    }
    // Quadratic reciprocity for odd a, b.
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(b.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    std::swap(a, b);
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  return b == 1 ? result : 0;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) {
    throw PreconditionViolated("factorize: n must be >= 1");
  }
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      out.emplace_back(p, e);
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

namespace detail {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t sqrt_minus_one_prime(std::uint64_t p) {
  if (p % 4 != 1) {
    throw PreconditionViolated("sqrt_minus_one_prime: p must be 1 mod 4");
  }
  if (p < kScanRootLimit) {
    for (std::uint64_t x = 1; x < p; ++x) {
      if ((x * x + 1) % p == 0) return x;
    }
  } else {
    // c^((p-1)/4) has order 4 exactly when c is a non-residue.
    for (std::uint64_t c = 2; c < p; ++c) {
      if (pow_mod(c, (p - 1) / 2, p) == p - 1) {
        return pow_mod(c, (p - 1) / 4, p);
      }
    }
  }
  throw PreconditionViolated("sqrt_minus_one_prime: " + std::to_string(p) + " is not prime");
}

namespace {

// Inverse of x mod m for gcd(x, m) = 1, m >= 2.
std::uint64_t inverse_u64(std::uint64_t x, std::uint64_t m) {
  __int128 old_r = x % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

// Roots of x^2 = -1 modulo p^e, all of them, in [0, p^e).
std::vector<std::uint64_t> prime_power_roots(std::uint64_t p, unsigned e) {
  if (p == 2) {
    if (e == 1) return {1};
    return {};
  }
  if (p % 4 != 1) {
    return {};
  }
  std::uint64_t x = sqrt_minus_one_prime(p);
  std::uint64_t modulus = p;
  for (unsigned k = 1; k < e; ++k) {
    modulus *= p;
    // Newton step: x <- x - (x^2 + 1) / (2x)
    const std::uint64_t fx = (mul_mod(x, x, modulus) + 1) % modulus;
    const std::uint64_t step = mul_mod(fx, inverse_u64(mul_mod(2, x, modulus), modulus), modulus);
    x = (x + modulus - step) % modulus;
  }
  return {x, modulus - x};
}

}  // namespace
}  // namespace detail

std::vector<std::uint64_t> sqrt_minus_one(std::uint64_t t) {
  if (t == 0) {
    throw PreconditionViolated("sqrt_minus_one: t must be >= 1");
  }
  if (t % 4 == 0) {
    return {};
  }
  std::vector<std::uint64_t> residues{0};
  std::uint64_t modulus = 1;
  for (const auto& [p, e] : factorize(t)) {
    const auto local = detail::prime_power_roots(p, e);
    if (local.empty()) {
      return {};
    }
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const std::uint64_t combined = modulus * pe;
    const std::uint64_t m_inv = modulus == 1 ? 0 : detail::inverse_u64(modulus % pe, pe);
    std::vector<std::uint64_t> next;
    next.reserve(residues.size() * local.size());
    for (std::uint64_t r1 : residues) {
      for (std::uint64_t r2 : local) {
        if (modulus == 1) {
          next.push_back(r2);
          continue;
        }
        const std::uint64_t diff = (r2 % pe + pe - r1 % pe) % pe;
        const std::uint64_t lift = detail::mul_mod(diff, m_inv, pe);
        next.push_back(r1 + modulus * lift);
      }
    }
    residues = std::move(next);
    modulus = combined;
  }
  for (auto& r : residues) {
    r = std::min(r, t - r);
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return residues;
}

}  // namespace dedekind
