#pragma once

#include <cstddef>
#include <vector>

namespace chpm {

// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  // Integral of f over [a, b] with a single panel.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      sum += weights_[k] * f(mid + half * nodes_[k]);
    }
    return half * sum;
  }

  // Integral over [a, b] split into `panels` equal subintervals.
  template <class F>
  double integrate_composite(F&& f, double a, double b, int panels) const {
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + width * p;
      const double hi = (p + 1 == panels) ? b : a + width * (p + 1);
      sum += integrate(f, lo, hi);
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Composite rule with approximately `total_nodes` nodes: panels of up to 16 nodes.
struct CompositeRule {
  explicit CompositeRule(int total_nodes);

  template <class F>
  double integrate(F&& f, double a, double b) const {
    return rule.integrate_composite(f, a, b, panels);
  }

  GaussLegendre rule;
  int panels;
};

}  // namespace chpm
