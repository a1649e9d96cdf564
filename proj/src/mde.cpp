#include "vvmf/mde.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace vvmf {

namespace {

// Triple-independent products of P, Q, R, shared by every build_mde call.
struct RamanujanProducts {
  QExpansion one, P, Q, R, P2, P3, PQ;
};

std::shared_ptr<const RamanujanProducts> ramanujan_products(int order) {
  static std::mutex mu;
  static std::shared_ptr<const RamanujanProducts> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->P.order() < order) {
    auto [P, Q, R] = pqr_series(order);
    QExpansion P2 = P * P;
    QExpansion P3 = P2 * P;
    QExpansion PQ = P * Q;
    cached = std::make_shared<const RamanujanProducts>(RamanujanProducts{
        QExpansion::constant(ExactRational(1), order), std::move(P), std::move(Q), std::move(R),
        std::move(P2), std::move(P3), std::move(PQ)});
  }
  return cached;
}

}  // namespace

MDESystem build_mde(const RepTriple& t, int order) {
  if (order < 0) throw InputError(ErrorCode::InvalidArgument, "negative order");
  const auto base = ramanujan_products(order);
  auto cut = [order](const QExpansion& s) { return s.truncated(order); };
  const QExpansion one = cut(base->one), P = cut(base->P), Q = cut(base->Q), R = cut(base->R);
  const QExpansion P2 = cut(base->P2), P3 = cut(base->P3), PQ = cut(base->PQ);

  const BigInt N(t.N());
  const BigInt x0 = 4 * BigInt(t.sigma()) - 2 * N;
  // x4 = 144 omega - x0 (12N + 3 x0) - 8N^2, the value for which the indicial
  // roots of the ODE are exactly A/N, B/N, C/N.
  const BigInt x4 = 144 * BigInt(t.omega()) - x0 * (12 * N + 3 * x0) - 8 * N * N;
  const BigInt x6 = x0 * x4 + x0 * (x0 + 2 * N) * (x0 + 4 * N) - 1728 * t.pi();

  const std::int64_t k0 = t.k0();
  const BigInt twelve_n = 12 * N;
  const ExactRational alpha4(x4, twelve_n * twelve_n);
  const ExactRational alpha6(x6, twelve_n * twelve_n * twelve_n);

  const ExactRational k(k0);
  const ExactRational c_p = ExactRational(3) * k + ExactRational(6);
  const ExactRational c_q = ExactRational(3) * k + ExactRational(2) + ExactRational(144) * alpha4;

  QExpansion g2 = ExactRational(3) * one + c_p * P;
  QExpansion g1 = one + c_p * P + (ExactRational(3) * k * k + ExactRational(9) * k + ExactRational(6)) * P2 +
                  c_q * Q;
  QExpansion g0 = (k * c_q) * PQ + (k * (k + ExactRational(1)) * (k + ExactRational(2))) * P3 +
                  (k - ExactRational(432) * alpha6) * R;

  return MDESystem{t, x0, x4, x6, k0, alpha4, alpha6, std::move(g0), std::move(g1),
                   std::move(g2)};
}

ExactRational phi_j(const MDESystem& sys, int j, const ExactRational& lambda) {
  if (j < 0 || j > sys.order()) {
    throw InputError(ErrorCode::OrderExceeded, "phi_" + std::to_string(j) +
                                                   " needs the ODE built to order " +
                                                   std::to_string(j) + ", have " +
                                                   std::to_string(sys.order()));
  }
  return sys.g2[j] * lambda * (lambda - ExactRational(1)) + sys.g1[j] * lambda + sys.g0[j];
}

ExactRational indicial_phi(const MDESystem& sys, const ExactRational& lambda) {
  const ExactRational one(1), two(2);
  return lambda * (lambda - one) * (lambda - two) + phi_j(sys, 0, lambda);
}

BigInt lambda_n(const RepTriple& t, Labeling lab, std::int64_t n) {
  if (n < 0) throw InputError(ErrorCode::InvalidArgument, "lambda(n) needs n >= 0");
  const auto [a, b, c] = relabeled(t, lab);
  const BigInt nn = BigInt(t.N()) * n;
  BigInt value = nn * (nn + (a - b) + (a - c)) + BigInt(a - b) * (a - c);
  if (value == 0) {
    throw std::logic_error("lambda(n) = 0: resonant exponents in a validated triple");
  }
  return value;
}

ExactRational FractionFreeComponent::coefficient(int n) const {
  return ExactRational(numer.at(n), denom.at(n));
}

ValuationValue FractionFreeComponent::valuation(int n, std::int64_t p) const {
  if (numer.at(n) == 0) return ValuationValue::infinity();
  const auto up = static_cast<unsigned long>(p);
  return ValuationValue(count_factor(numer[n], up) - count_factor(denom.at(n), up));
}

QExpansion FractionFreeComponent::to_series() const {
  std::vector<ExactRational> coeffs;
  coeffs.reserve(numer.size());
  for (int n = 0; n <= order(); ++n) coeffs.push_back(coefficient(n));
  return QExpansion(exponent, std::move(coeffs));
}

QExpansion ode_residual(const MDESystem& sys, const QExpansion& f, int order) {
  if (order > f.order() || order > sys.order()) {
    throw InputError(ErrorCode::OrderExceeded,
                     "residual to order " + std::to_string(order) + " needs f (order " +
                         std::to_string(f.order()) + ") and the ODE (order " +
                         std::to_string(sys.order()) + ") that far");
  }
  const QExpansion f0 = f.truncated(order);
  const QExpansion t1 = theta(f0);
  const QExpansion t2 = theta(t1);
  const QExpansion t3 = theta(t2);
  // q^2 f'' = (theta^2 - theta) f,  q^3 f''' = (theta^3 - 3 theta^2 + 2 theta) f.
  const QExpansion d2 = t2 - t1;
  const QExpansion d3 = t3 - ExactRational(3) * t2 + ExactRational(2) * t1;
  const auto g = [order](const QExpansion& s) { return s.truncated(order); };
  return d3 + g(sys.g2) * d2 + g(sys.g1) * t1 + g(sys.g0) * f0;
}

ExactRational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

DerivedBasis derived_basis(const MDESystem& sys, const MinimalVector& f0, int order) {
  const ExactRational k0(sys.k0);
  std::array<QExpansion, 3> df{f0.components[0], f0.components[1], f0.components[2]};
  std::array<QExpansion, 3> d2f = df;
  for (int i = 0; i < 3; ++i) {
    df[i] = modular_derivative(f0.components[i], k0, order);
    d2f[i] = modular_derivative(df[i], k0 + ExactRational(2));
  }
  Matrix3 b;
  for (int i = 0; i < 3; ++i) {
    const ExactRational r = sys.triple.root(i);
    ExactRational entry(1);
    for (int j = 0; j < 3; ++j) {
      b[i][j] = entry;
      entry *= r - (k0 + ExactRational(2L * j)) / ExactRational(12);
    }
  }
  return DerivedBasis{std::move(df), std::move(d2f), b, determinant(b)};
}

}  // namespace vvmf
