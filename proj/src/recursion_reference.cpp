#include <string>

#include "vvmf/mde.hpp"

namespace vvmf::reference {

QExpansion solve_component(const MDESystem& sys, Labeling lab, int order) {
  if (order < 0 || order > sys.order()) {
    throw InputError(ErrorCode::OrderExceeded,
                     "recursion to order " + std::to_string(order) + " needs the ODE built that far");
  }
  const ExactRational r = sys.triple.root(lab.slot);
  std::vector<ExactRational> a(static_cast<std::size_t>(order) + 1);
  a[0] = ExactRational(1);
  for (int n = 1; n <= order; ++n) {
    ExactRational s;
    for (int j = 0; j < n; ++j) s += a[j] * phi_j(sys, n - j, r + ExactRational(j));
    a[n] = -s / indicial_phi(sys, r + ExactRational(n));
  }
  return QExpansion(r, std::move(a));
}

MinimalVector minimal_vector(const MDESystem& sys, int order) {
  return MinimalVector{{reference::solve_component(sys, Labeling{0}, order),
                        reference::solve_component(sys, Labeling{1}, order),
                        reference::solve_component(sys, Labeling{2}, order)}};
}

}  // namespace vvmf::reference
