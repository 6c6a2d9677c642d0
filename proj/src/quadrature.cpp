#include "chpm/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "chpm/errors.hpp"

namespace chpm {

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  nodes_.assign(n, 0.0);
  weights_.assign(n, 0.0);

  // Newton on P_n from the Chebyshev-like initial guess; roots are symmetric.
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

CompositeRule::CompositeRule(int total_nodes)
    : rule(total_nodes < 1 ? 1 : (total_nodes < 16 ? total_nodes : 16)),
      panels(total_nodes < 16 ? 1 : (total_nodes + 15) / 16) {
  if (total_nodes < 1) throw DomainError("quadrature node count must be positive");
}

}  // namespace chpm
