#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vvmf/arith.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/reps.hpp"

namespace vvmf {

/// z_n = N^3 phi_1(A/N + n), A taken from the labeling.
BigInt z_n_value(const RepTriple& t, Labeling lab, std::int64_t n);

inline constexpr int kDefaultConstancyWindow = 50;
inline constexpr int kDefaultFormulaTerms = 100;

/// Which of the eight prime cases applies to (t, p), and a labeling under
/// which nu_p(z_n) is constant at the case's value over the window.
struct PrimeCase {
  std::int64_t p = 0;
  int case_id = 0;            // 1..8, 0 when no case applies
  std::string case_label;     // "1" .. "8", with "3a"/"3b" for the p = 7 split
  long predicted_nu = 0;      // nu_p(z_n) for every n, if the case applies
  std::optional<Labeling> labeling;  // empty if no labeling confirmed the value
  long delta = 0;             // predicted_nu - nu_p(N) (< 0 when covered)
  bool hypothesis = false;    // nu_p(N) > 2 nu_p(z_0)

  bool covered() const { return case_id != 0 && labeling.has_value(); }
};

PrimeCase classify_prime(const RepTriple& t, std::int64_t p,
                         int window = kDefaultConstancyWindow);

/// n delta - nu_p(prod_{k<=n} k lambda(k)) for n = 1..n_max (index 0 unused),
/// or nullopt when the case is not covered under `lab` or the hypothesis fails.
std::optional<std::vector<long>> predicted_valuations(const RepTriple& t, std::int64_t p,
                                                      Labeling lab, int n_max);
std::optional<long> predicted_valuation(const RepTriple& t, std::int64_t p, Labeling lab,
                                        int n);

enum class Verdict { FormulaVerified, EmpiricallyUnbounded, BoundedInWindow, Inapplicable };
std::string_view verdict_name(Verdict v);

struct ValuationRow {
  int n;
  ValuationValue observed;
  std::optional<long> predicted;
};

struct ValuationReport {
  RepTriple triple;
  std::int64_t p;
  PrimeCase prime_case;
  Labeling labeling;  // component whose coefficients were observed
  std::vector<ValuationRow> rows;
  Verdict verdict;
  bool all_rows_match = false;
};

ValuationReport verify_formula(const RepTriple& t, std::int64_t p,
                               int n_max = kDefaultFormulaTerms);

/// Prime divisors of N / gcd(N, 2^8 3^4 5^2 7^2).
std::vector<std::int64_t> ubd_criterion(std::int64_t n);

enum class ProfileVerdict { AllIntegral, BoundedInWindow, DecreasingUnboundedPattern };
std::string_view profile_verdict_name(ProfileVerdict v);

struct PrimeProfile {
  std::int64_t p;
  long min_valuation;
  int argmin;
  bool strictly_decreasing;  // over the nonzero coefficients with n >= 1
};

struct DenominatorProfile {
  std::vector<PrimeProfile> primes;  // every prime seen in a denominator
  BigInt unfactored = 1;             // product of denominator parts left unsplit
  ProfileVerdict verdict = ProfileVerdict::AllIntegral;
};

DenominatorProfile denominator_profile(const QExpansion& f, int n_max,
                                       const std::vector<std::uint64_t>& prime_hints = {});

/// Primes that can divide a denominator of a minimal-vector coefficient up to
/// n_max: those of N, of the ODE coefficients' scale, and of every k lambda(k).
std::vector<std::uint64_t> recursion_prime_hints(const RepTriple& t, int n_max);

}  // namespace vvmf
