#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace eaqmds {

/// Prime factor with multiplicity.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization; n must be >= 1. Factors sorted ascending.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// When q = p^a with p prime and a >= 1, returns (p, a).
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest t >= 1 with a^t = 1 (mod m). Requires gcd(a, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// a^e over the integers, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t a, unsigned e,
                                         std::uint64_t limit = UINT64_MAX);

/// Binomial coefficient saturated at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace eaqmds
