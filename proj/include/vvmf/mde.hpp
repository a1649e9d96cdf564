#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vvmf/arith.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/reps.hpp"

namespace vvmf {

/// The monic order-3 modular ODE  D^3 f + alpha4 E4 D f + alpha6 E6 f = 0
/// attached to a triple, rewritten in q as
///   q^3 f''' + g2 q^2 f'' + g1 q f' + g0 f = 0.
/// Coefficient n of g_j is G_j(n).
struct MDESystem {
  RepTriple triple;
  BigInt x0, x4, x6;
  std::int64_t k0;
  ExactRational alpha4;  // x4 / (12N)^2
  ExactRational alpha6;  // x6 / (12N)^3
  QExpansion g0, g1, g2;

  int order() const { return g0.order(); }
};

MDESystem build_mde(const RepTriple& t, int order);

/// phi(lambda) = lambda(lambda-1)(lambda-2) + phi_0(lambda).
ExactRational indicial_phi(const MDESystem& sys, const ExactRational& lambda);
/// phi_j(lambda) = G2(j) lambda(lambda-1) + G1(j) lambda + G0(j), 0 <= j <= order.
ExactRational phi_j(const MDESystem& sys, int j, const ExactRational& lambda);

/// lambda(n) = Nn[Nn + (A-B) + (A-C)] + (A-B)(A-C) for the labeling's A role;
/// equals N^2 phi(A/N + n) / n.
BigInt lambda_n(const RepTriple& t, Labeling lab, std::int64_t n);

/// F0: one component per exponent, in the triple's canonical order, each
/// with leading coefficient 1.
struct MinimalVector {
  std::array<QExpansion, 3> components;
};

/// Coefficients a(n) = numer[n] / denom[n] of one component, unreduced.
/// denom[n] = prod_{k<=n} L k lambda(k) for a fixed integer scale L.
struct FractionFreeComponent {
  ExactRational exponent;
  std::vector<BigInt> numer;
  std::vector<BigInt> denom;

  int order() const { return static_cast<int>(numer.size()) - 1; }
  ExactRational coefficient(int n) const;
  ValuationValue valuation(int n, std::int64_t p) const;
  QExpansion to_series() const;
};

/// Fraction-free Fuchsian recursion for the component whose exponent takes
/// the A role. OpenMP-parallel over the inner convolution.
FractionFreeComponent solve_component(const MDESystem& sys, Labeling lab, int order);

/// All three components; the recursions run concurrently.
MinimalVector minimal_vector(const MDESystem& sys, int order);

namespace reference {

/// Literal rational recursion with phi evaluated as a polynomial; serial.
QExpansion solve_component(const MDESystem& sys, Labeling lab, int order);
MinimalVector minimal_vector(const MDESystem& sys, int order);

}  // namespace reference

/// L[f] computed by series arithmetic from the g-series; zero through
/// `order` for a genuine solution.
QExpansion ode_residual(const MDESystem& sys, const QExpansion& f, int order);

using Matrix3 = std::array<std::array<ExactRational, 3>, 3>;

struct DerivedBasis {
  std::array<QExpansion, 3> DF0;   // D_{k0} F0
  std::array<QExpansion, 3> D2F0;  // D_{k0+2} D_{k0} F0
  Matrix3 B;                       // B[i][j] = prod_{k<j} (r_i - (k0+2k)/12)
  ExactRational det;
};

DerivedBasis derived_basis(const MDESystem& sys, const MinimalVector& f0, int order);

ExactRational determinant(const Matrix3& m);

}  // namespace vvmf
