#include "vvmf/valuation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vvmf/factor.hpp"
#include "vvmf/mde.hpp"

namespace vvmf {

BigInt z_n_value(const RepTriple& t, Labeling lab, std::int64_t n) {
  const BigInt A(relabeled(t, lab)[0]);
  const BigInt N(t.N()), s(t.sigma()), w(t.omega());
  const BigInt an = A + N * n;
  const BigInt an1 = A + N * (n - 1);
  return 24 * (10 * w * N * n + s * an * an1) +
         8 * (2 * s - N) * (s * (4 * s - N) - 15 * w - 6 * s * an) + 240 * A * w + 504 * t.pi();
}

namespace {

void require_dividing_prime(const RepTriple& t, std::int64_t p) {
  if (!is_prime(p)) throw InputError(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (t.N() % p != 0) {
    throw InputError(ErrorCode::PrimeDoesNotDivideLevel,
                     std::to_string(p) + " does not divide N = " + std::to_string(t.N()));
  }
}

long nu(const BigInt& x, std::int64_t p) {
  return count_factor(x, static_cast<unsigned long>(p));
}

bool divides(std::int64_t p, const BigInt& x) { return x == 0 || nu(x, p) > 0; }

bool constant_over_window(const RepTriple& t, std::int64_t p, Labeling lab, long value,
                          int window) {
  for (int n = 0; n <= window; ++n) {
    const BigInt z = z_n_value(t, lab, n);
    if (z == 0 || nu(z, p) != value) return false;
  }
  return true;
}

}  // namespace

PrimeCase classify_prime(const RepTriple& t, std::int64_t p, int window) {
  require_dividing_prime(t, p);
  PrimeCase out;
  out.p = p;
  const long vN = nu(BigInt(t.N()), p);
  const BigInt pi = t.pi(), omega(t.omega());

  auto set = [&](int id, std::string label, long predicted) {
    out.case_id = id;
    out.case_label = std::move(label);
    out.predicted_nu = predicted;
  };
  if (p > 7) {
    set(1, "1", 0);
  } else if (p == 7) {
    if (divides(7, pi)) {
      set(2, "2", 0);
    } else if (vN >= 2) {
      divides(7, omega) ? set(3, "3a", 1) : set(3, "3b", 0);
    }
  } else if (p == 5) {
    if (!divides(5, pi)) {
      set(4, "4", 0);
    } else if (vN >= 2) {
      set(5, "5", 1);
    }
  } else if (p == 3) {
    if (vN >= 2 && !divides(3, omega)) {
      set(6, "6", 1);
    } else if (vN >= 3 && divides(3, omega)) {
      set(7, "7", 2);
    }
  } else if (p == 2 && vN >= 5) {
    set(8, "8", 4);
  }
  if (out.case_id == 0) return out;

  // Slots are in ascending exponent order, so the first hit is the smallest.
  for (int slot = 0; slot < 3; ++slot) {
    if (constant_over_window(t, p, Labeling{slot}, out.predicted_nu, window)) {
      out.labeling = Labeling{slot};
      break;
    }
  }
  out.delta = out.predicted_nu - vN;
  out.hypothesis = vN > 2 * out.predicted_nu;
  return out;
}

std::optional<std::vector<long>> predicted_valuations(const RepTriple& t, std::int64_t p,
                                                      Labeling lab, int n_max) {
  const PrimeCase pc = classify_prime(t, p);
  if (pc.case_id == 0 || !pc.hypothesis) return std::nullopt;
  if (!constant_over_window(t, p, lab, pc.predicted_nu, kDefaultConstancyWindow)) {
    return std::nullopt;
  }
  std::vector<long> out(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);
  long product_nu = 0;
  for (int n = 1; n <= n_max; ++n) {
    product_nu += nu(BigInt(n), p) + nu(lambda_n(t, lab, n), p);
    out[n] = n * pc.delta - product_nu;
  }
  return out;
}

std::optional<long> predicted_valuation(const RepTriple& t, std::int64_t p, Labeling lab,
                                        int n) {
  if (n < 1) throw InputError(ErrorCode::InvalidArgument, "predicted valuation needs n >= 1");
  auto all = predicted_valuations(t, p, lab, n);
  if (!all) return std::nullopt;
  return (*all)[n];
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FormulaVerified: return "formula-verified";
    case Verdict::EmpiricallyUnbounded: return "empirically-unbounded";
    case Verdict::BoundedInWindow: return "bounded-in-window";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

namespace {

// Valuations of the nonzero entries with n >= 1 form a strictly decreasing
// sequence of at least two negative-ending terms.
bool strictly_decreasing(const std::vector<std::pair<int, long>>& seq) {
  if (seq.size() < 2 || seq.back().second >= 0) return false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i].second >= seq[i - 1].second) return false;
  }
  return true;
}

}  // namespace

ValuationReport verify_formula(const RepTriple& t, std::int64_t p, int n_max) {
  if (n_max < 1) throw InputError(ErrorCode::InvalidArgument, "n_max must be >= 1");
  const PrimeCase pc = classify_prime(t, p);
  const Labeling lab = pc.labeling.value_or(Labeling{0});

  std::optional<std::vector<long>> predicted;
  if (pc.covered() && pc.hypothesis) predicted = predicted_valuations(t, p, lab, n_max);

  const MDESystem sys = build_mde(t, n_max);
  const FractionFreeComponent comp = solve_component(sys, lab, n_max);

  ValuationReport report{t, p, pc, lab, {}, Verdict::Inapplicable, false};
  std::vector<std::pair<int, long>> seq;
  bool match = true;
  for (int n = 1; n <= n_max; ++n) {
    const ValuationValue obs = comp.valuation(n, p);
    std::optional<long> pred;
    if (predicted) {
      pred = (*predicted)[n];
      if (obs != ValuationValue(*pred)) match = false;
    }
    if (!obs.is_infinite()) seq.emplace_back(n, obs.value());
    report.rows.push_back({n, obs, pred});
  }
  if (!predicted) {
    report.verdict = Verdict::Inapplicable;
  } else if (match && strictly_decreasing(seq)) {
    report.verdict = Verdict::FormulaVerified;
    report.all_rows_match = true;
  } else {
    report.all_rows_match = match;
    report.verdict =
        strictly_decreasing(seq) ? Verdict::EmpiricallyUnbounded : Verdict::BoundedInWindow;
  }
  return report;
}

std::vector<std::int64_t> ubd_criterion(std::int64_t n) {
  if (n < 1) throw InputError(ErrorCode::InvalidArgument, "level must be >= 1");
  constexpr std::int64_t kBoundedPart = 256LL * 81 * 25 * 49;
  std::int64_t rest = n / std::gcd(n, kBoundedPart);
  std::vector<std::int64_t> primes;
  for (auto [q, e] : factor_u64(static_cast<std::uint64_t>(rest))) {
    primes.push_back(static_cast<std::int64_t>(q));
  }
  return primes;
}

std::string_view profile_verdict_name(ProfileVerdict v) {
  switch (v) {
    case ProfileVerdict::AllIntegral: return "all-integral";
    case ProfileVerdict::BoundedInWindow: return "bounded-in-window";
    case ProfileVerdict::DecreasingUnboundedPattern: return "decreasing-unbounded-pattern";
  }
  return "unknown";
}

DenominatorProfile denominator_profile(const QExpansion& f, int n_max,
                                       const std::vector<std::uint64_t>& prime_hints) {
  if (n_max > f.order()) {
    throw InputError(ErrorCode::OrderExceeded, "profile to " + std::to_string(n_max) +
                                                   " exceeds series order " +
                                                   std::to_string(f.order()));
  }
  DenominatorProfile out;
  std::vector<std::uint64_t> seen;
  for (int n = 0; n <= n_max; ++n) {
    if (f[n].is_zero() || f[n].den() == 1) continue;
    auto part = prime_divisors(f[n].den(), prime_hints);
    seen.insert(seen.end(), part.primes.begin(), part.primes.end());
    if (part.cofactor != 1) out.unfactored *= part.cofactor;
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  bool any_decreasing = false;
  for (std::uint64_t up : seen) {
    const auto p = static_cast<std::int64_t>(up);
    PrimeProfile prof{p, 0, 0, false};
    std::vector<std::pair<int, long>> seq;
    for (int n = 0; n <= n_max; ++n) {
      if (f[n].is_zero()) continue;
      const long v = count_factor(f[n].num(), up) - count_factor(f[n].den(), up);
      if (v < prof.min_valuation) {
        prof.min_valuation = v;
        prof.argmin = n;
      }
      if (n >= 1) seq.emplace_back(n, v);
    }
    prof.strictly_decreasing = strictly_decreasing(seq);
    any_decreasing = any_decreasing || prof.strictly_decreasing;
    out.primes.push_back(prof);
  }
  if (out.primes.empty() && out.unfactored == 1) {
    out.verdict = ProfileVerdict::AllIntegral;
  } else {
    out.verdict = any_decreasing ? ProfileVerdict::DecreasingUnboundedPattern
                                 : ProfileVerdict::BoundedInWindow;
  }
  return out;
}

std::vector<std::uint64_t> recursion_prime_hints(const RepTriple& t, int n_max) {
  std::vector<std::uint64_t> hints{2, 3};
  auto add = [&hints](const BigInt& v) {
    auto part = prime_divisors(v);
    hints.insert(hints.end(), part.primes.begin(), part.primes.end());
  };
  add(BigInt(t.N()));
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 1; k <= n_max; ++k) add(lambda_n(t, Labeling{slot}, k));
  }
  for (int k = 2; k <= n_max; ++k) add(BigInt(k));
  std::sort(hints.begin(), hints.end());
  hints.erase(std::unique(hints.begin(), hints.end()), hints.end());
  return hints;
}

}  // namespace vvmf
