#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "support.hpp"

#include "vvmf/mde.hpp"
#include "vvmf/reps.hpp"
#include "vvmf/valuation.hpp"

using namespace vvmf;

namespace {

constexpr std::uint64_t kSeed = 20240613;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

std::string label(const RepTriple& t) {
  return "(" + std::to_string(t.A()) + "," + std::to_string(t.B()) + "," + std::to_string(t.C()) +
         ";" + std::to_string(t.N()) + ")";
}

ExactRational q(const BigInt& n, const BigInt& d) { return ExactRational(n, d); }

Outcome indicial_identities() {
  Outcome o;
  std::size_t checks = 0;
  const auto triples = vvmf::testing::all_triples(1, 20);
  for (const auto& t : triples) {
    const auto sys = build_mde(t, 1);
    const BigInt N = t.N();
    for (int slot = 0; slot < 3; ++slot) {
      const Labeling lab{slot};
      for (std::int64_t n = 0; n <= 50; ++n) {
        const ExactRational r = t.root(slot) + n;
        const ExactRational lhs = ExactRational(BigInt(N * N)) * indicial_phi(sys, r);
        const ExactRational rhs = n == 0 ? ExactRational() : ExactRational(BigInt(n * lambda_n(t, lab, n)));
        o.require(lhs == rhs, label(t) + " phi at n=" + std::to_string(n));
        const ExactRational z = ExactRational(BigInt(N * N * N)) * phi_j(sys, 1, r);
        o.require(z == ExactRational(z_n_value(t, lab, n)), label(t) + " z_n at n=" + std::to_string(n));
        checks += 2;
      }
    }
  }
  o.detail << triples.size() << " triples, " << checks << " identities";
  return o;
}

Outcome g_series_anchors(const std::vector<RepTriple>& sample) {
  Outcome o;
  for (const auto& t : sample) {
    const auto sys = build_mde(t, 50);
    const BigInt N = t.N(), s = t.sigma(), w = t.omega(), p = t.pi();
    const ExactRational g20 = ExactRational(3) - q(s, N);
    o.require(sys.g2[0] == g20, label(t) + " G2(0)");
    o.require(sys.g1[0] == g20 + q(w, N * N) - ExactRational(2), label(t) + " G1(0)");
    o.require(sys.g0[0] == -q(p, N * N * N), label(t) + " G0(0)");
    for (int n = 1; n <= 50; ++n) {
      o.require(sys.g2[n] == q(BigInt(24 * s * sigma_k(1, n)), N), label(t) + " G2(n)");
    }
    o.require(sys.g2[1] == q(BigInt(24 * s), N), label(t) + " G2(1)");
    o.require(sys.g1[1] == q(BigInt(240 * w - 48 * s * (2 * s - N)), BigInt(N * N)), label(t) + " G1(1)");
    o.require(sys.g0[1] == q(BigInt(504 * p + (2 * s - N) * (8 * s * (4 * s - N) - 120 * w)),
                             BigInt(N * N * N)),
              label(t) + " G0(1)");
  }
  o.detail << sample.size() << " triples, N <= 10^4, G2(n) for n <= 50";
  return o;
}

Outcome integrality(const std::vector<RepTriple>& sample) {
  Outcome o;
  for (const auto& t : sample) {
    const auto sys = build_mde(t, 50);
    const BigInt N = t.N();
    const BigInt d2 = t.N() % 2 == 0 ? 1 : 2, d3 = t.N() % 3 == 0 ? 1 : 3;
    for (int n = 2; n <= 50; ++n) {
      const std::string at = label(t) + " n=" + std::to_string(n);
      o.require(sys.g2[n].is_integer(), at + " G2");
      o.require((ExactRational(BigInt(d3 * N * N)) * sys.g1[n]).is_integer(), at + " G1");
      o.require((ExactRational(BigInt(d2 * d3 * N * N * N)) * sys.g0[n]).is_integer(), at + " G0");
    }
  }
  o.detail << sample.size() << " triples, 2 <= n <= 50";
  return o;
}

Outcome ode_residuals() {
  Outcome o;
  constexpr int T = 100;
  const auto sample = vvmf::testing::sample_triples(20, 300, kSeed + 4);
  for (const auto& t : sample) {
    const auto sys = build_mde(t, T);
    const auto f = minimal_vector(sys, T);
    for (int i = 0; i < 3; ++i) {
      o.require(ode_residual(sys, f.components[i], T).is_zero(),
                label(t) + " component " + std::to_string(i));
    }
  }
  const auto t = validate_triple(1, 2, 4, 7);
  const auto sys = build_mde(t, 10);
  auto coeffs = minimal_vector(sys, 10).components[0].coeffs();
  coeffs[1] += ExactRational(1);
  const auto res = ode_residual(sys, QExpansion(t.root(0), coeffs), 10);
  std::size_t first = 0;
  while (first < res.coeffs().size() && res[first].is_zero()) ++first;
  o.require(first == 1 && res[1] == q(24, 49), "perturbed residual");
  o.detail << sample.size() << " triples x 3 components through order " << T
           << "; perturbed first residual " << (first < res.coeffs().size() ? res[first].str() : "none")
           << " at n=" << first;
  return o;
}

Outcome valuation_law() {
  Outcome o;
  constexpr int T = 300;
  const auto t = validate_triple(1, 3, 7, 11);
  const auto pc = classify_prime(t, 11);
  o.require(pc.covered() && pc.delta == -1 && pc.hypothesis, "prime case");
  const auto report = verify_formula(t, 11, T);
  o.require(report.verdict == Verdict::FormulaVerified, "verdict");
  o.require(report.rows.size() == T, "row count");

  // Independent evaluation of n delta - nu_11(prod k lambda(k)).
  long acc = 0;
  long previous = 0;
  for (const auto& row : report.rows) {
    acc += valuation_p(BigInt(row.n * lambda_n(t, report.labeling, row.n)), 11).value();
    const long expect = -row.n - acc;
    o.require(row.observed == ValuationValue(expect), "row n=" + std::to_string(row.n));
    o.require(row.n == 1 || expect < previous, "strict decrease at n=" + std::to_string(row.n));
    previous = expect;
  }
  const auto f = solve_component(build_mde(t, 11), report.labeling, 11);
  o.require(f.coefficient(1) == q(-40, 33), "a(1)");
  o.require(f.valuation(1, 11) == ValuationValue(-1), "nu(a(1))");
  o.require(f.valuation(11, 11) == ValuationValue(-12), "nu(a(11))");
  o.detail << "a(1) = " << f.coefficient(1).str() << ", nu(a(11)) = " << f.valuation(11, 11).str()
           << ", nu(a(300)) = " << report.rows.back().observed.str();
  return o;
}

Outcome ubd_consistency() {
  Outcome o;
  std::size_t pairs = 0, triples = 0;
  for (const auto& t : vvmf::testing::all_triples(1, 60)) {
    const auto primes = ubd_criterion(t.N());
    if (primes.empty()) continue;
    ++triples;
    for (auto p : primes) {
      ++pairs;
      const auto pc = classify_prime(t, p);
      const long nu_n = valuation_p(BigInt(t.N()), p).value();
      o.require(pc.covered(), label(t) + " p=" + std::to_string(p) + " covered");
      o.require(pc.hypothesis && nu_n > 2 * pc.predicted_nu, label(t) + " hypothesis");
      o.require(verify_formula(t, p, 100).verdict == Verdict::FormulaVerified,
                label(t) + " p=" + std::to_string(p) + " verified");
    }
  }
  o.detail << triples << " triples, " << pairs << " (triple, prime) pairs, n_max = 100";
  return o;
}

Outcome bounded_contrast() {
  Outcome o;
  auto triples = vvmf::testing::all_triples(1, 5);
  triples.push_back(validate_triple(1, 2, 4, 7));
  triples.push_back(validate_triple(3, 5, 6, 7));
  constexpr int T = 200;
  for (const auto& t : triples) {
    const auto hints = recursion_prime_hints(t, T);
    const auto f = minimal_vector(build_mde(t, T), T);
    for (int i = 0; i < 3; ++i) {
      const auto prof = denominator_profile(f.components[i], T, hints);
      o.require(prof.verdict != ProfileVerdict::DecreasingUnboundedPattern,
                label(t) + " component " + std::to_string(i));
      for (const auto& pp : prof.primes) {
        o.require(!pp.strictly_decreasing, label(t) + " p=" + std::to_string(pp.p));
      }
    }
  }
  const auto a = minimal_vector(build_mde(validate_triple(1, 2, 4, 7), 1), 1).components[0];
  o.require(a[1] == ExactRational(-3), "a(1) for (1,2,4,7)");
  o.detail << triples.size() << " triples x 3 components, " << T << " coefficients; a(1) = "
           << a[1].str();
  return o;
}

ExactRational frac(const ExactRational& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return x - ExactRational(fl);
}

Outcome families() {
  Outcome o;
  const auto r = gamma02_family({4, 1, 0});
  o.require(r.triple == validate_triple(2, 3, 7, 8) && r.formula_level == 8 &&
                r.finite_image_M == std::optional<std::int64_t>{4},
            "gamma02(4,1,0)");
  bool collision = false;
  try {
    gamma02_family({4, 1, 1});
  } catch (const InputError& e) {
    collision = e.code() == ErrorCode::EigenvalueCollision;
  }
  o.require(collision, "gamma02(4,1,1) collision");
  o.require(gamma3_family({0, 0, 0}).triple == validate_triple(0, 1, 2, 3), "gamma3(0,0,0)");
  o.require(gamma3_family({2, 2, 2}).triple == validate_triple(1, 3, 5, 6), "gamma3(2,2,2)");

  int valid = 0, collisions = 0, gcd_rejects = 0;
  const ExactRational half(BigInt(1), BigInt(2));
  for (std::int64_t M = 1; M <= 12; ++M) {
    for (std::int64_t A = 0; A < M; ++A) {
      if (std::gcd(A, M) != 1) continue;
      for (int x = 0; x < 4; ++x) {
        const std::string at = "M=" + std::to_string(M) + " A=" + std::to_string(A) +
                               " x=" + std::to_string(x);
        try {
          const auto f = gamma02_family({M, A, x});
          ++valid;
          const auto& ex = f.eigen_exponents;
          o.require(frac(ex[1] + half) == ex[2], at + " lambda3 = -lambda2");
          o.require(frac(ExactRational(BigInt(x), BigInt(4)) + ex[0] + ExactRational(2) * ex[1]).is_zero(),
                    at + " relation");
          std::int64_t l = 1;
          for (const auto& e : ex) l = std::lcm(l, to_int64(e.den()));
          o.require(l == 8 * M / std::gcd<std::int64_t>(4, M * x), at + " level");
        } catch (const InputError& e) {
          if (e.code() == ErrorCode::EigenvalueCollision) ++collisions;
          else if (e.code() == ErrorCode::GcdNotOne) ++gcd_rejects;
          else o.require(false, at + " unexpected rejection");
        }
      }
    }
  }
  o.detail << "grid M <= 12: " << valid << " valid, " << collisions << " collisions, " << gcd_rejects
           << " rejected (common denominator 8M/gcd(4,Mx) not reduced)";
  return o;
}

Outcome vandermonde() {
  Outcome o;
  const auto sample = vvmf::testing::sample_triples(20, 500, kSeed + 9);
  for (const auto& t : sample) {
    const auto sys = build_mde(t, 3);
    const auto b = derived_basis(sys, minimal_vector(sys, 3), 3);
    ExactRational vdm(1);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) vdm *= t.root(j) - t.root(i);
    }
    o.require(b.det == vdm && determinant(b.B) == vdm && !vdm.is_zero(), label(t));
  }
  const auto t = validate_triple(1, 2, 4, 7);
  const auto sys = build_mde(t, 3);
  const auto det = derived_basis(sys, minimal_vector(sys, 3), 3).det;
  o.require(det == q(6, 343), "(1,2,4,7)");
  o.detail << sample.size() << " triples; det(B) for (1,2,4,7) = " << det.str();
  return o;
}

Outcome enumeration() {
  Outcome o;
  std::vector<std::array<std::int64_t, 3>> listed, brute;
  for (const auto& t : enumerate_level(7)) listed.push_back(t.exponents());
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = a + 1; b < 7; ++b) {
      for (std::int64_t c = b + 1; c < 7; ++c) {
        if ((a + b + c) % 7 == 0) brute.push_back({a, b, c});
      }
    }
  }
  const std::vector<std::array<std::int64_t, 3>> expected{
      {0, 1, 6}, {0, 2, 5}, {0, 3, 4}, {1, 2, 4}, {3, 5, 6}};
  o.require(listed == expected, "listed triples");
  o.require(brute == expected, "brute force");
  o.detail << listed.size() << " triples";
  return o;
}

}  // namespace

int main() {
  const auto sample = vvmf::testing::sample_triples(100, 10000, kSeed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"indicial identities", indicial_identities},
      {"G-series anchors", [&] { return g_series_anchors(sample); }},
      {"G-series integrality", [&] { return integrality(sample); }},
      {"ODE residual", ode_residuals},
      {"valuation law (1,3,7,11), p = 11", valuation_law},
      {"UBD criterion consistency", ubd_consistency},
      {"bounded contrast", bounded_contrast},
      {"induced families", families},
      {"basis determinant", vandermonde},
      {"level-7 enumeration", enumeration},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].second();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
         << criteria[i].first << " [" << o.detail.str() << "] (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
