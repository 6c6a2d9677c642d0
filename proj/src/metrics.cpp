#include "chpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "chpm/errors.hpp"
#include "chpm/quadrature.hpp"

namespace chpm {

namespace {

// Calls visit(x, w) for every node of `rule` over [a, b].
template <class Visit>
void for_each_node(const CompositeRule& rule, double a, double b, Visit&& visit) {
  const auto& nodes = rule.rule.nodes();
  const auto& weights = rule.rule.weights();
  for (int p = 0; p < rule.panels; ++p) {
    const double lo = a + (b - a) * p / rule.panels;
    const double hi = a + (b - a) * (p + 1) / rule.panels;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < nodes.size(); ++k) visit(mid + half * nodes[k], half * weights[k]);
  }
}

}  // namespace

double delta_p(std::span<const double> coeffs, const StefanProblem& problem,
               const HeatPolynomialBasis& basis, int quad_points) {
  if (!problem.has_exact_flux()) throw DomainError("delta_p needs an exact flux oracle");
  const CompositeRule rule(quad_points);
  const double lambda = problem.conductivity;
  double num = 0.0;
  double den = 0.0;
  for_each_node(rule, 0.0, problem.horizon, [&](double t, double w) {
    const double approx = -lambda * basis.eval_combination(coeffs, 0.0, t, Derivative::Dx);
    const double exact = problem.exact_flux(t);
    num += w * (approx - exact) * (approx - exact);
    den += w * exact * exact;
  });
  return std::sqrt(num / den);
}

double delta_u(std::span<const double> coeffs, const StefanProblem& problem,
               const HeatPolynomialBasis& basis, int quad_points_t, int quad_points_x) {
  if (!problem.has_exact_solution()) throw DomainError("delta_u needs an exact solution oracle");
  const CompositeRule outer(quad_points_t);
  const CompositeRule inner(quad_points_x);
  double num = 0.0;
  double den = 0.0;
  for_each_node(outer, 0.0, problem.horizon, [&](double t, double wt) {
    for_each_node(inner, 0.0, problem.boundary(t), [&](double x, double wx) {
      const double exact = problem.exact_solution(x, t);
      const double d = exact - basis.eval_combination(coeffs, x, t);
      num += wt * wx * d * d;
      den += wt * wx * exact * exact;
    });
  });
  return std::sqrt(num / den);
}

std::vector<FluxSample> flux_curve(std::span<const double> coeffs, const StefanProblem& problem,
                                   const HeatPolynomialBasis& basis, int samples) {
  if (samples < 2) throw DomainError("flux curve needs at least two samples");
  std::vector<FluxSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < samples; ++i) {
    const double t = (i + 1 == samples) ? problem.horizon : problem.horizon * i / (samples - 1);
    const double rec = basis.eval_combination(coeffs, 0.0, t, Derivative::Dx);
    if (problem.has_exact_flux()) {
      const double ex = problem.exact_flux_gradient(t);
      out.push_back({t, rec, ex, std::abs(rec - ex)});
    } else {
      out.push_back({t, rec, nan, nan});
    }
  }
  return out;
}

ErrorReport evaluate(std::span<const double> coeffs, const StefanProblem& problem,
                     const HeatPolynomialBasis& basis, int samples) {
  ErrorReport r;
  r.delta_p = delta_p(coeffs, problem, basis);
  r.delta_u = delta_u(coeffs, problem, basis);
  r.flux_curve = flux_curve(coeffs, problem, basis, samples);
  for (const auto& s : r.flux_curve) r.max_abs_flux_error = std::max(r.max_abs_flux_error, s.abs_error);
  return r;
}

double decay_shape(int order, double t_ref) {
  if (order == 0) return 1.0;
  return std::pow(std::numbers::e / (2.0 * order * t_ref), 0.5 * order);
}

std::vector<DecayEntry> coefficient_decay(std::span<const double> coeffs, double t_ref,
                                          double horizon) {
  if (!(t_ref > horizon)) throw DomainError("decay reference time must exceed the horizon");
  double scale = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    scale = std::max(scale, std::abs(coeffs[n]) / decay_shape(static_cast<int>(n), t_ref));
  }
  std::vector<DecayEntry> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const int order = static_cast<int>(n);
    out.push_back({order, std::abs(coeffs[n]), scale * decay_shape(order, t_ref)});
  }
  return out;
}

}  // namespace chpm
