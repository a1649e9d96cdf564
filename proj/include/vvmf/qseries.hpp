#pragma once

#include <variant>
#include <vector>

#include "vvmf/arith.hpp"

namespace vvmf {

/// Truncated q-expansion q^r * sum_{n=0}^{T} c(n) q^n with 0 <= r < 1.
/// Coefficients of q^{r+n} are exact for n <= order().
class QExpansion {
 public:
  QExpansion(ExactRational exponent, std::vector<ExactRational> coeffs);

  static QExpansion constant(const ExactRational& c, int order);

  const ExactRational& exponent() const { return exponent_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  const ExactRational& operator[](std::size_t n) const { return coeffs_.at(n); }

  QExpansion truncated(int order) const;
  bool is_zero() const;

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  ExactRational exponent_;
  std::vector<ExactRational> coeffs_;
};

QExpansion operator+(const QExpansion& a, const QExpansion& b);
QExpansion operator-(const QExpansion& a, const QExpansion& b);
// Exponents add; a sum >= 1 is folded back into [0,1) by shifting one power of q.
QExpansion operator*(const QExpansion& a, const QExpansion& b);
QExpansion operator*(const ExactRational& c, const QExpansion& f);

enum class SeriesOp { Add, Mul, Scale };
QExpansion series_arith(SeriesOp op, const QExpansion& lhs,
                        const std::variant<QExpansion, ExactRational>& rhs);

/// q d/dq, acting on q^{r+n} as multiplication by r+n.
QExpansion theta(const QExpansion& f);

/// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, to order T.
QExpansion eisenstein(int weight, int order);

struct RamanujanSeries {
  QExpansion P, Q, R;  // -E2/12, E4/144, -E6/432
};
RamanujanSeries pqr_series(int order);

/// D_k f = theta f - (k/12) E_2 f, to the order of f.
QExpansion modular_derivative(const QExpansion& f, const ExactRational& weight);
/// Same, truncated to `order`; throws if f is not known that far.
QExpansion modular_derivative(const QExpansion& f, const ExactRational& weight, int order);
/// D_{k+2(n-1)} o ... o D_k applied to f.
QExpansion modular_derivative_iterate(const QExpansion& f, const ExactRational& weight, int times);

}  // namespace vvmf
