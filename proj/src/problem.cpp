#include "chpm/problem.hpp"

#include <cmath>
#include <numbers>

#include "chpm/errors.hpp"

namespace chpm {

namespace {

void require_horizon(double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("horizon must be positive and finite");
  }
}

}  // namespace

void StefanProblem::validate() const {
  if (!(diffusivity > 0.0)) throw DomainError("diffusivity must be positive");
  if (!(conductivity > 0.0)) throw DomainError("conductivity must be positive");
  if (!(latent_heat > 0.0)) throw DomainError("latent heat must be positive");
  if (!(density > 0.0)) throw DomainError("density must be positive");
  require_horizon(horizon);
  if (!boundary || !boundary_rate || !initial_profile) {
    throw DomainError("problem '" + name + "' is missing s(t), s'(t) or f(x)");
  }
  for (int i = 0; i <= 100; ++i) {
    const double t = horizon * i / 100.0;
    const double s = boundary(t);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw DomainError("moving boundary must stay positive on [0, T]");
    }
  }
}

StefanProblem StefanProblem::with_horizon(double new_horizon) const {
  require_horizon(new_horizon);
  StefanProblem copy = *this;
  copy.horizon = new_horizon;
  return copy;
}

const char* to_string(BenchmarkId id) {
  return id == BenchmarkId::Example1 ? "example1" : "example2";
}

BenchmarkId parse_benchmark(const std::string& name) {
  if (name == "example1") return BenchmarkId::Example1;
  if (name == "example2") return BenchmarkId::Example2;
  throw DomainError("unknown benchmark '" + name + "'");
}

StefanProblem example1(double horizon) {
  require_horizon(horizon);
  constexpr double r = std::numbers::sqrt2;
  constexpr double inv_r = 1.0 / std::numbers::sqrt2;
  StefanProblem p;
  p.name = "example1";
  p.horizon = horizon;
  p.boundary = [](double t) { return r - 1.0 + t * inv_r; };
  p.boundary_rate = [](double) { return inv_r; };
  p.initial_profile = [](double x) { return -1.0 + std::exp(1.0 - inv_r - x * inv_r); };
  p.exact_solution = [](double x, double t) {
    return -1.0 + std::exp(1.0 - inv_r + 0.5 * t - x * inv_r);
  };
  p.exact_flux_gradient = [](double t) { return -inv_r * std::exp(1.0 - inv_r + 0.5 * t); };
  return p;
}

StefanProblem example2(double horizon) {
  require_horizon(horizon);
  const double alpha = neumann_root(kExample2AlphaTabulated);
  const double t0 = kExample2T0;
  const double erf_alpha = std::erf(alpha);
  StefanProblem p;
  p.name = "example2";
  p.horizon = horizon;
  p.boundary = [=](double t) { return 2.0 * alpha * std::sqrt(t + t0); };
  p.boundary_rate = [=](double t) { return alpha / std::sqrt(t + t0); };
  p.initial_profile = [=](double x) {
    return 1.0 - std::erf(x / (2.0 * std::sqrt(t0))) / erf_alpha;
  };
  p.exact_solution = [=](double x, double t) {
    return 1.0 - std::erf(x / (2.0 * std::sqrt(t + t0))) / erf_alpha;
  };
  p.exact_flux_gradient = [=](double t) {
    return -1.0 / (std::sqrt(std::numbers::pi * (t + t0)) * erf_alpha);
  };
  return p;
}

StefanProblem make_benchmark(BenchmarkId id, double horizon) {
  return id == BenchmarkId::Example1 ? example1(horizon) : example2(horizon);
}

double neumann_consistency(double alpha, double /*t0*/) {
  return alpha * std::sqrt(std::numbers::pi) * std::exp(alpha * alpha) * std::erf(alpha);
}

double neumann_root(double guess) {
  if (!(guess > 0.0)) throw DomainError("Neumann root guess must be positive");
  double alpha = guess;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int iter = 0; iter < 50; ++iter) {
    const double e = std::exp(alpha * alpha);
    const double g = alpha * sqrt_pi * e * std::erf(alpha) - 1.0;
    // d/da [a sqrt(pi) e^{a^2} erf(a)] = sqrt(pi) e^{a^2} erf(a) (1 + 2a^2) + 2a
    const double dg = sqrt_pi * e * std::erf(alpha) * (1.0 + 2.0 * alpha * alpha) + 2.0 * alpha;
    const double step = g / dg;
    alpha -= step;
    if (std::abs(step) < 1e-16 * alpha) break;
  }
  return alpha;
}

StefanProblem linear_boundary_problem(const PhysicalParameters& params, double p0, double p1,
                                      double horizon) {
  require_horizon(horizon);
  if (!(p0 > 0.0)) throw DomainError("linear boundary needs s(0) = p0 > 0");
  if (p1 == 0.0) throw DomainError("linear boundary needs a moving front (p1 != 0)");
  const double a2 = params.diffusivity * params.diffusivity;
  const double k = p1 / a2;
  const double c = params.latent_heat * params.density * a2 / params.conductivity;
  const double u_star = params.melt_temperature;

  StefanProblem p;
  p.name = "linear";
  p.diffusivity = params.diffusivity;
  p.conductivity = params.conductivity;
  p.latent_heat = params.latent_heat;
  p.density = params.density;
  p.melt_temperature = u_star;
  p.horizon = horizon;
  p.boundary = [=](double t) { return p0 + p1 * t; };
  p.boundary_rate = [=](double) { return p1; };
  p.exact_solution = [=](double x, double t) {
    return u_star - c + c * std::exp(k * (p1 * t - x + p0));
  };
  p.initial_profile = [=](double x) { return u_star - c + c * std::exp(k * (p0 - x)); };
  p.exact_flux_gradient = [=](double t) { return -k * c * std::exp(k * (p1 * t + p0)); };
  p.validate();
  return p;
}

StefanProblem sqrt_boundary_problem(const PhysicalParameters& params, double alpha, double t0,
                                    double horizon) {
  require_horizon(horizon);
  if (!(alpha > 0.0) || !(t0 > 0.0)) throw DomainError("square-root boundary needs alpha, t0 > 0");
  const double a = params.diffusivity;
  const double xi = alpha / a;
  const double erf_xi = std::erf(xi);
  const double amplitude = params.latent_heat * params.density * alpha * a *
                           std::sqrt(std::numbers::pi) * erf_xi * std::exp(xi * xi) /
                           params.conductivity;
  const double u_star = params.melt_temperature;

  StefanProblem p;
  p.name = "sqrt";
  p.diffusivity = a;
  p.conductivity = params.conductivity;
  p.latent_heat = params.latent_heat;
  p.density = params.density;
  p.melt_temperature = u_star;
  p.horizon = horizon;
  p.boundary = [=](double t) { return 2.0 * alpha * std::sqrt(t + t0); };
  p.boundary_rate = [=](double t) { return alpha / std::sqrt(t + t0); };
  p.exact_solution = [=](double x, double t) {
    return u_star + amplitude * (1.0 - std::erf(x / (2.0 * a * std::sqrt(t + t0))) / erf_xi);
  };
  p.initial_profile = [=](double x) {
    return u_star + amplitude * (1.0 - std::erf(x / (2.0 * a * std::sqrt(t0))) / erf_xi);
  };
  p.exact_flux_gradient = [=](double t) {
    return -amplitude / (erf_xi * a * std::sqrt(std::numbers::pi * (t + t0)));
  };
  p.validate();
  return p;
}

}  // namespace chpm
