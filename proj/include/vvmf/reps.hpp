#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vvmf/arith.hpp"

namespace vvmf {

/// Eigen-data of rho(T) = diag(e(A/N), e(B/N), e(C/N)), canonically ordered
/// A < B < C. Only constructible through validate_triple.
class RepTriple {
 public:
  std::int64_t A() const { return e_[0]; }
  std::int64_t B() const { return e_[1]; }
  std::int64_t C() const { return e_[2]; }
  std::int64_t N() const { return n_; }
  const std::array<std::int64_t, 3>& exponents() const { return e_; }

  std::int64_t sigma() const { return e_[0] + e_[1] + e_[2]; }
  std::int64_t omega() const { return e_[0] * e_[1] + e_[0] * e_[2] + e_[1] * e_[2]; }
  BigInt pi() const { return BigInt(e_[0]) * e_[1] * e_[2]; }
  /// Minimal weight (4 sigma - 2N) / N.
  std::int64_t k0() const { return (4 * sigma() - 2 * n_) / n_; }
  /// The indicial root exponents()[i] / N.
  ExactRational root(int i) const { return ExactRational(BigInt(e_.at(i)), BigInt(n_)); }

  friend bool operator==(const RepTriple&, const RepTriple&) = default;
  friend auto operator<=>(const RepTriple& a, const RepTriple& b) {
    return std::tie(a.n_, a.e_) <=> std::tie(b.n_, b.e_);
  }

 private:
  friend RepTriple validate_triple(std::int64_t, std::int64_t, std::int64_t, std::int64_t);
  RepTriple(std::array<std::int64_t, 3> e, std::int64_t n) : e_(e), n_(n) {}
  std::array<std::int64_t, 3> e_;
  std::int64_t n_;
};

/// Sorts the exponents and checks range, distinctness, gcd(A,B,C,N) = 1 and
/// N | 4 sigma. Throws InputError with the code of the first violated check.
RepTriple validate_triple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n);

/// Which of the three exponents takes the A role in the single-component
/// formulas; the remaining two fill B and C.
struct Labeling {
  int slot = 0;  // 0, 1, 2 index into RepTriple::exponents()
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// (A', B', C') with A' = exponents()[slot] and B' < C' the other two.
std::array<std::int64_t, 3> relabeled(const RepTriple& t, Labeling lab);

/// All admissible triples of exact level N, sorted by (A, B, C).
std::vector<RepTriple> enumerate_level(std::int64_t n);

struct Gamma02Character {
  std::int64_t M = 1;
  std::int64_t A = 0;
  int x = 0;
};

struct Gamma3Character {
  int x0 = 0, x1 = 0, x2 = 0;
};

struct FamilyResult {
  RepTriple triple;
  /// Eigenvalue exponents in [0,1) in the order the induction produces them.
  std::array<ExactRational, 3> eigen_exponents;
  std::int64_t formula_level;         // 8M/gcd(4,Mx) or a divisor of 12
  ExactRational presentation_check;   // exponent of the defining relation, must be 0
  std::optional<std::int64_t> finite_image_M;  // N = 2M, C' = B' + M, M >= 4
};

FamilyResult gamma02_family(const Gamma02Character& data);
FamilyResult gamma3_family(const Gamma3Character& data);

/// M with N = 2M, M >= 4 and two exponents differing by M, if any.
std::optional<std::int64_t> gamma02_pattern(const RepTriple& t);

struct Classification {
  bool congruence_by_small_level = false;
  bool primitive_level7 = false;
  std::optional<std::int64_t> gamma02_pattern;
  std::vector<std::int64_t> ubd_primes;
  std::vector<std::string> notes;
};

Classification classify_triple(const RepTriple& t);

}  // namespace vvmf
