#include "vvmf/factor.hpp"

#include <algorithm>
#include <numeric>

namespace vvmf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  const u64 d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<u64> flat;
  factor_into(n, flat);
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<u64, int>> result;
  for (u64 p : flat) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

PartialFactorization prime_divisors(const BigInt& n, const std::vector<u64>& hints,
                                    u64 trial_bound) {
  PartialFactorization out;
  BigInt rest = abs(n);
  if (rest == 0) return out;
  auto strip = [&](u64 p) {
    const BigInt bp(static_cast<unsigned long>(p));
    if (mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) {
      mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
      out.primes.push_back(p);
    }
  };
  for (u64 p : hints) {
    if (rest == 1) break;
    if (p >= 2) strip(p);
  }
  for (u64 p = 2; p <= trial_bound && rest != 1; p += (p == 2 ? 1 : 2)) {
    strip(p);
  }
  if (rest != 1 && mpz_sizeinbase(rest.get_mpz_t(), 2) <= 63) {
    for (auto [p, e] : factor_u64(mpz_get_ui(rest.get_mpz_t()))) out.primes.push_back(p);
    rest = 1;
  }
  std::sort(out.primes.begin(), out.primes.end());
  out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
  out.cofactor = rest;
  return out;
}

}  // namespace vvmf
