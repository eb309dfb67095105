#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace schur {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned exponent;
};

// n = p^k with k >= 1, or nullopt (n = 1 is not a prime power).
std::optional<PrimePower> as_prime_power(std::uint64_t n);

// Throws SizeError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

}  // namespace schur
