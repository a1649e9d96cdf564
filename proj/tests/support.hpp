#pragma once

#include <random>
#include <set>
#include <vector>

#include "vvmf/reps.hpp"

namespace vvmf::testing {

// Admissible triples with 3 <= N <= n_max, drawn with a fixed seed. C is
// chosen in the residue class that makes 4 sigma divisible by N.
inline std::vector<RepTriple> sample_triples(std::size_t count, std::int64_t n_max,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> level(3, n_max);
  std::set<RepTriple> seen;
  std::vector<RepTriple> out;
  while (out.size() < count) {
    const std::int64_t n = level(rng);
    const std::int64_t m = n / std::gcd<std::int64_t>(n, 4);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1), lift(0, n / m - 1);
    const std::int64_t a = pick(rng), b = pick(rng);
    const std::int64_t c = ((-(a + b)) % m + m) % m + m * lift(rng);
    try {
      const RepTriple t = validate_triple(a, b, c, n);
      if (seen.insert(t).second) out.push_back(t);
    } catch (const InputError&) {
    }
  }
  return out;
}

inline std::vector<RepTriple> all_triples(std::int64_t n_min, std::int64_t n_max) {
  std::vector<RepTriple> out;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    for (const auto& t : enumerate_level(n)) out.push_back(t);
  }
  return out;
}

}  // namespace vvmf::testing
