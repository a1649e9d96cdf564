#include "vvmf/reps.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "vvmf/valuation.hpp"

namespace vvmf {

namespace {

ExactRational frac(const ExactRational& r) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return r - ExactRational(fl);
}

// Brings exponents in [0,1) to the least common denominator and validates.
RepTriple triple_from_exponents(const std::array<ExactRational, 3>& r) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (r[i] == r[j]) {
        throw InputError(ErrorCode::EigenvalueCollision,
                         "eigenvalue exponents collide at " + r[i].str() +
                             " (reducible or non-distinct case)");
      }
    }
  }
  BigInt level = 1;
  for (const auto& x : r) level = lcm(level, x.den());
  std::array<std::int64_t, 3> ints{};
  for (int i = 0; i < 3; ++i) ints[i] = to_int64(r[i].num() * (level / r[i].den()));
  return validate_triple(ints[0], ints[1], ints[2], to_int64(level));
}

}  // namespace

RepTriple validate_triple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
  if (n < 1) {
    throw InputError(ErrorCode::InvalidArgument, "level must be >= 1, got " + std::to_string(n));
  }
  std::array<std::int64_t, 3> e{a, b, c};
  for (auto x : e) {
    if (x < 0 || x > n - 1) {
      throw InputError(ErrorCode::ExponentOutOfRange,
                       "exponent " + std::to_string(x) + " outside [0, " +
                           std::to_string(n - 1) + "]");
    }
  }
  std::sort(e.begin(), e.end());
  if (e[0] == e[1] || e[1] == e[2]) {
    throw InputError(ErrorCode::ExponentsNotDistinct, "exponents must be distinct");
  }
  const std::int64_t g = std::gcd(std::gcd(e[0], e[1]), std::gcd(e[2], n));
  if (g != 1) {
    throw InputError(ErrorCode::GcdNotOne, "gcd(A,B,C,N) = " + std::to_string(g) + " > 1");
  }
  const std::int64_t four_sigma = 4 * (e[0] + e[1] + e[2]);
  if (four_sigma % n != 0) {
    throw InputError(ErrorCode::NonIntegralWeight,
                     std::to_string(n) + " does not divide 4*sigma = " +
                         std::to_string(four_sigma) + " (non-integral minimal weight)");
  }
  return RepTriple(e, n);
}

std::array<std::int64_t, 3> relabeled(const RepTriple& t, Labeling lab) {
  if (lab.slot < 0 || lab.slot > 2) {
    throw InputError(ErrorCode::InvalidArgument, "labeling slot must be 0, 1 or 2");
  }
  const auto& e = t.exponents();
  std::array<std::int64_t, 3> out{e[lab.slot], 0, 0};
  int k = 1;
  for (int i = 0; i < 3; ++i) {
    if (i != lab.slot) out[k++] = e[i];
  }
  return out;
}

std::vector<RepTriple> enumerate_level(std::int64_t n) {
  if (n < 1) throw InputError(ErrorCode::InvalidArgument, "level must be >= 1");
  // N | 4 sigma  <=>  sigma = 0 mod step.
  const std::int64_t step = n / std::gcd(n, std::int64_t{4});
  std::vector<std::vector<RepTriple>> per_a(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      const std::int64_t rem = (a + b) % step;
      std::int64_t c = rem == 0 ? 0 : step - rem;
      while (c <= b) c += step;
      for (; c < n; c += step) {
        if (std::gcd(std::gcd(a, b), std::gcd(c, n)) != 1) continue;
        per_a[a].push_back(validate_triple(a, b, c, n));
      }
    }
  }
  std::vector<RepTriple> out;
  for (auto& v : per_a) out.insert(out.end(), v.begin(), v.end());
  return out;
}

FamilyResult gamma02_family(const Gamma02Character& d) {
  if (d.M < 1) throw InputError(ErrorCode::InvalidArgument, "M must be >= 1");
  if (d.A < 0 || d.A >= d.M || std::gcd(d.A, d.M) != 1) {
    throw InputError(ErrorCode::InvalidArgument, "need 0 <= A < M with gcd(A, M) = 1");
  }
  if (d.x < 0 || d.x > 3) throw InputError(ErrorCode::InvalidArgument, "x must be in {0,1,2,3}");

  const BigInt M(d.M), A(d.A), x(d.x);
  const ExactRational lambda1(A, M);
  const ExactRational lambda2 = frac(ExactRational(-(4 * A + M * x), 8 * M));
  const ExactRational lambda3 = frac(lambda2 + ExactRational(1, 2));
  const std::array<ExactRational, 3> exps{lambda1, lambda2, lambda3};

  RepTriple t = triple_from_exponents(exps);
  const std::int64_t mx = d.M * d.x;
  const std::int64_t formula_level = 8 * d.M / std::gcd(std::int64_t{4}, mx);
  if (t.N() != formula_level) {
    const std::int64_t g = formula_level / t.N();
    throw InputError(ErrorCode::GcdNotOne,
                     "exponents " + std::to_string(t.A() * g) + "," + std::to_string(t.B() * g) +
                         "," + std::to_string(t.C() * g) + " over " +
                         std::to_string(formula_level) + " share the factor " + std::to_string(g) +
                         "; the eigenvalues have order " + std::to_string(t.N()));
  }
  // chi(E) chi(P1) chi(P2) with chi(P1) = lambda2^2.
  const ExactRational relation =
      frac(ExactRational(x, BigInt(4)) + ExactRational(2) * lambda2 + lambda1);
  return FamilyResult{t, exps, formula_level, relation, gamma02_pattern(t)};
}

FamilyResult gamma3_family(const Gamma3Character& d) {
  for (int v : {d.x0, d.x1, d.x2}) {
    if (v < 0 || v > 3) throw InputError(ErrorCode::InvalidArgument, "x_j must be in {0,1,2,3}");
  }
  if ((d.x0 - d.x1) % 2 != 0 || (d.x0 - d.x2) % 2 != 0) {
    throw InputError(ErrorCode::ParityViolation, "x_i must agree mod 2");
  }
  const int x = -(d.x0 + d.x1 + d.x2);
  std::array<ExactRational, 3> exps;
  for (int j = 0; j < 3; ++j) exps[j] = frac(ExactRational(BigInt(x + 4 * j), BigInt(12)));
  RepTriple t = triple_from_exponents(exps);
  const ExactRational relation = frac(ExactRational(BigInt(d.x0 + d.x1 + d.x2 + x), BigInt(4)));
  return FamilyResult{t, exps, t.N(), relation, gamma02_pattern(t)};
}

std::optional<std::int64_t> gamma02_pattern(const RepTriple& t) {
  if (t.N() % 2 != 0) return std::nullopt;
  const std::int64_t m = t.N() / 2;
  if (m < 4) return std::nullopt;
  const auto& e = t.exponents();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (e[j] - e[i] == m) return m;
    }
  }
  return std::nullopt;
}

Classification classify_triple(const RepTriple& t) {
  Classification c;
  c.congruence_by_small_level = t.N() < 6;
  const auto& e = t.exponents();
  c.primitive_level7 = t.N() == 7 && (e == std::array<std::int64_t, 3>{1, 2, 4} ||
                                      e == std::array<std::int64_t, 3>{3, 5, 6});
  c.gamma02_pattern = gamma02_pattern(t);
  c.ubd_primes = ubd_criterion(t.N());

  if (c.congruence_by_small_level) {
    c.notes.emplace_back("level < 6: kernel is congruence, denominators bounded");
  }
  if (c.primitive_level7) {
    c.notes.emplace_back("primitive level-7 class: congruence kernel asserted without proof");
  }
  if (c.gamma02_pattern) {
    c.notes.emplace_back("N = 2M with C' = B' + M, M = " + std::to_string(*c.gamma02_pattern) +
                         ": finite image (induced from Gamma_0(2))");
  }
  if (!c.ubd_primes.empty()) {
    std::string s = "p-UBD certified for p in {";
    for (std::size_t i = 0; i < c.ubd_primes.size(); ++i) {
      s += (i ? ", " : "") + std::to_string(c.ubd_primes[i]);
    }
    c.notes.push_back(s + "}; every nonzero rational form for rho is p-UBD");
    if (c.gamma02_pattern) c.notes.emplace_back("kernel is noncongruence");
  }
  return c;
}

}  // namespace vvmf
