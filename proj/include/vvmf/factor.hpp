#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vvmf/arith.hpp"

namespace vvmf {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Prime factorization (ascending primes with exponents), Pollard-Brent rho.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

struct PartialFactorization {
  std::vector<std::uint64_t> primes;  // ascending, distinct
  BigInt cofactor = 1;                // > 1 when something could not be split
};

// Distinct prime divisors of |n|. Primes from `hints` and below `trial_bound`
// are stripped first; a remaining cofactor below 2^63 is split by rho, larger
// ones are returned unfactored.
PartialFactorization prime_divisors(const BigInt& n,
                                    const std::vector<std::uint64_t>& hints = {},
                                    std::uint64_t trial_bound = 1000);

}  // namespace vvmf
