#include "vvmf/qseries.hpp"

#include <algorithm>
#include <string>

namespace vvmf {

QExpansion::QExpansion(ExactRational exponent, std::vector<ExactRational> coeffs)
    : exponent_(std::move(exponent)), coeffs_(std::move(coeffs)) {
  if (exponent_ < ExactRational(0) || exponent_ >= ExactRational(1)) {
    throw InputError(ErrorCode::ExponentOutOfRange,
                     "series exponent must lie in [0,1), got " + exponent_.str());
  }
  if (coeffs_.empty()) {
    throw InputError(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  }
}

QExpansion QExpansion::constant(const ExactRational& c, int order) {
  std::vector<ExactRational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = c;
  return QExpansion(ExactRational(0), std::move(coeffs));
}

QExpansion QExpansion::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw InputError(ErrorCode::OrderExceeded,
                     "cannot truncate order " + std::to_string(this->order()) + " series to " +
                         std::to_string(order));
  }
  return QExpansion(exponent_, {coeffs_.begin(), coeffs_.begin() + order + 1});
}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

namespace {

QExpansion add_or_sub(const QExpansion& a, const QExpansion& b, bool subtract) {
  if (a.exponent() != b.exponent()) {
    throw InputError(ErrorCode::ExponentMismatch, "cannot add series with exponents " +
                                                      a.exponent().str() + " and " +
                                                      b.exponent().str());
  }
  const int order = std::min(a.order(), b.order());
  std::vector<ExactRational> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) out[n] = subtract ? a[n] - b[n] : a[n] + b[n];
  return QExpansion(a.exponent(), std::move(out));
}

}  // namespace

QExpansion operator+(const QExpansion& a, const QExpansion& b) { return add_or_sub(a, b, false); }
QExpansion operator-(const QExpansion& a, const QExpansion& b) { return add_or_sub(a, b, true); }

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<mpq_class> acc(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    const mpq_class& ai = a[i].raw();
    for (int j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) acc[i + j] += ai * b[j].raw();
    }
  }
  std::vector<ExactRational> out;
  out.reserve(acc.size() + 1);
  ExactRational exponent = a.exponent() + b.exponent();
  if (exponent >= ExactRational(1)) {
    exponent -= ExactRational(1);
    out.emplace_back(0);
  }
  for (auto& c : acc) out.emplace_back(c);
  return QExpansion(std::move(exponent), std::move(out));
}

QExpansion operator*(const ExactRational& c, const QExpansion& f) {
  std::vector<ExactRational> out;
  out.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) out.push_back(c * x);
  return QExpansion(f.exponent(), std::move(out));
}

QExpansion series_arith(SeriesOp op, const QExpansion& lhs,
                        const std::variant<QExpansion, ExactRational>& rhs) {
  if (op == SeriesOp::Scale) {
    if (!std::holds_alternative<ExactRational>(rhs)) {
      throw InputError(ErrorCode::InvalidArgument, "scale needs a rational operand");
    }
    return std::get<ExactRational>(rhs) * lhs;
  }
  if (!std::holds_alternative<QExpansion>(rhs)) {
    throw InputError(ErrorCode::InvalidArgument, "add/mul need a series operand");
  }
  const auto& other = std::get<QExpansion>(rhs);
  return op == SeriesOp::Add ? lhs + other : lhs * other;
}

QExpansion theta(const QExpansion& f) {
  std::vector<ExactRational> out;
  out.reserve(f.coeffs().size());
  for (int n = 0; n <= f.order(); ++n) out.push_back((f.exponent() + ExactRational(n)) * f[n]);
  return QExpansion(f.exponent(), std::move(out));
}

QExpansion eisenstein(int weight, int order) {
  if (weight < 2 || weight % 2 != 0) {
    throw InputError(ErrorCode::InvalidArgument,
                     "Eisenstein weight must be even and >= 2, got " + std::to_string(weight));
  }
  if (order < 0) throw InputError(ErrorCode::InvalidArgument, "negative order");
  const ExactRational scale = ExactRational(-2L * weight) / bernoulli(weight);
  std::vector<ExactRational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = ExactRational(1);
  for (int n = 1; n <= order; ++n) coeffs[n] = scale * ExactRational(sigma_k(weight - 1, n));
  return QExpansion(ExactRational(0), std::move(coeffs));
}

RamanujanSeries pqr_series(int order) {
  return {ExactRational(-1, 12) * eisenstein(2, order),
          ExactRational(1, 144) * eisenstein(4, order),
          ExactRational(-1, 432) * eisenstein(6, order)};
}

QExpansion modular_derivative(const QExpansion& f, const ExactRational& weight) {
  const QExpansion e2 = eisenstein(2, f.order());
  return theta(f) - (weight / ExactRational(12)) * (e2 * f);
}

QExpansion modular_derivative(const QExpansion& f, const ExactRational& weight, int order) {
  if (order > f.order()) {
    throw InputError(ErrorCode::OrderExceeded, "series known to order " +
                                                   std::to_string(f.order()) + ", asked for " +
                                                   std::to_string(order));
  }
  return modular_derivative(f.truncated(order), weight);
}

QExpansion modular_derivative_iterate(const QExpansion& f, const ExactRational& weight,
                                      int times) {
  if (times < 0) throw InputError(ErrorCode::InvalidArgument, "negative iterate count");
  QExpansion out = f;
  for (int i = 0; i < times; ++i) out = modular_derivative(out, weight + ExactRational(2L * i));
  return out;
}

}  // namespace vvmf
