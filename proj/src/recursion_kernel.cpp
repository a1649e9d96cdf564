#include <string>

#include <omp.h>

#include "vvmf/mde.hpp"

namespace vvmf {

// With phi_m(r+j) = Phi(m,j) / L for integers Phi and c_n = L n lambda(n),
//   a(n) = -N^2 sum_{j<n} a(j) Phi(n-j, j) / c_n,
// so a(n) = u_n / D_n with D_n = c_1 ... c_n and
//   u_n = -N^2 sum_{j<n} w_j Phi(n-j, j),   w_j = u_j c_{j+1} ... c_{n-1}.
// Every step is integer-only; gcds are never taken.
namespace {

void require_order(const MDESystem& sys, int order) {
  if (order < 0 || order > sys.order()) {
    throw InputError(ErrorCode::OrderExceeded, "recursion to order " + std::to_string(order) +
                                                   " needs the ODE built that far (have " +
                                                   std::to_string(sys.order()) + ")");
  }
}

}  // namespace

FractionFreeComponent solve_component(const MDESystem& sys, Labeling lab, int order) {
  require_order(sys, order);
  const RepTriple& t = sys.triple;
  const auto roles = relabeled(t, lab);
  const BigInt N(t.N());
  const BigInt N2 = N * N;

  BigInt L = 1;
  for (int m = 1; m <= order; ++m) {
    L = lcm(L, N2 * sys.g2[m].den());
    L = lcm(L, N * sys.g1[m].den());
    L = lcm(L, sys.g0[m].den());
  }
  const auto n_terms = static_cast<std::size_t>(order) + 1;
  std::vector<BigInt> s2(n_terms), s1(n_terms), s0(n_terms);
  for (int m = 1; m <= order; ++m) {
    s2[m] = L / (N2 * sys.g2[m].den()) * sys.g2[m].num();
    s1[m] = L / (N * sys.g1[m].den()) * sys.g1[m].num();
    s0[m] = L / sys.g0[m].den() * sys.g0[m].num();
  }
  // X_j = N (r + j): lambda(lambda-1) = X(X-N)/N^2, lambda = X/N.
  std::vector<BigInt> X(n_terms), XX(n_terms);
  for (int j = 0; j <= order; ++j) {
    X[j] = BigInt(roles[0]) + N * j;
    XX[j] = X[j] * (X[j] - N);
  }

  FractionFreeComponent out{t.root(lab.slot), std::vector<BigInt>(n_terms),
                            std::vector<BigInt>(n_terms)};
  out.numer[0] = 1;
  out.denom[0] = 1;
  std::vector<BigInt> w(n_terms);
  w[0] = 1;

  for (int n = 1; n <= order; ++n) {
    BigInt sum = 0;
#pragma omp parallel
    {
      BigInt local = 0, phi;
#pragma omp for schedule(static) nowait
      for (int j = 0; j < n; ++j) {
        const int m = n - j;
        phi = s2[m] * XX[j] + s1[m] * X[j] + s0[m];
        local += w[j] * phi;
      }
#pragma omp critical(vvmf_kernel_sum)
      sum += local;
    }
    const BigInt c_n = L * n * lambda_n(t, lab, n);
    out.numer[n] = -N2 * sum;
    out.denom[n] = out.denom[n - 1] * c_n;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) w[j] *= c_n;
    w[n] = out.numer[n];
  }
  return out;
}

MinimalVector minimal_vector(const MDESystem& sys, int order) {
  require_order(sys, order);
  std::vector<QExpansion> comps(3, QExpansion::constant(ExactRational(1), 0));
#pragma omp parallel for schedule(static, 1)
  for (int slot = 0; slot < 3; ++slot) {
    comps[slot] = solve_component(sys, Labeling{slot}, order).to_series();
  }
  return MinimalVector{{comps[0], comps[1], comps[2]}};
}

}  // namespace vvmf
