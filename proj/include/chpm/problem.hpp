#pragma once

#include <functional>
#include <string>

namespace chpm {

using TimeFunction = std::function<double(double)>;
using SpaceTimeFunction = std::function<double(double, double)>;

// One-phase inverse Stefan problem on 0 < x < s(t), 0 < t <= T with the
// boundary trajectory s(t) known and the flux at x = 0 unknown.
struct StefanProblem {
  std::string name;
  double diffusivity = 1.0;       // a
  double conductivity = 1.0;      // lambda
  double latent_heat = 1.0;       // L
  double density = 1.0;           // gamma
  double melt_temperature = 0.0;  // u*
  double horizon = 1.0;           // T

  TimeFunction boundary;       // s(t)
  TimeFunction boundary_rate;  // s'(t)
  TimeFunction initial_profile;  // f(x) on [0, s(0)]

  // Optional exact oracles; empty when unknown.
  SpaceTimeFunction exact_solution;
  TimeFunction exact_flux_gradient;  // u_x(0, t)

  double initial_position() const { return boundary(0.0); }
  double stefan_coefficient() const { return latent_heat * density; }
  bool has_exact_solution() const { return static_cast<bool>(exact_solution); }
  bool has_exact_flux() const { return static_cast<bool>(exact_flux_gradient); }

  // Clean Stefan-condition data L*gamma*s'(t).
  double stefan_data(double t) const { return stefan_coefficient() * boundary_rate(t); }

  // Heat flux P(t) = -lambda u_x(0, t) from the exact oracle.
  double exact_flux(double t) const { return -conductivity * exact_flux_gradient(t); }

  // Checks parameter positivity and s(t) > 0 on a grid over [0, T].
  void validate() const;

  StefanProblem with_horizon(double horizon) const;
};

enum class BenchmarkId { Example1, Example2 };

const char* to_string(BenchmarkId id);
BenchmarkId parse_benchmark(const std::string& name);

// Tabulated similarity constants of the second benchmark.
inline constexpr double kExample2T0 = 0.162558;
inline constexpr double kExample2AlphaTabulated = 0.620063;

// s(t) = sqrt(2) - 1 + t/sqrt(2), u = -1 + exp(1 - 1/sqrt(2) + t/2 - x/sqrt(2)).
StefanProblem example1(double horizon = 1.0);

// s(t) = 2 alpha sqrt(t + t0), u = 1 - erf(x / (2 sqrt(t + t0))) / erf(alpha),
// with alpha the root of neumann_consistency(alpha) = 1 nearest the tabulated value.
StefanProblem example2(double horizon = 1.0);

StefanProblem make_benchmark(BenchmarkId id, double horizon = 1.0);

// alpha sqrt(pi) exp(alpha^2) erf(alpha); equals 1 when the erf profile with
// s = 2 alpha sqrt(t + t0) satisfies the Stefan condition for a = lambda = L gamma = 1.
// t0 does not enter the relation and is accepted for symmetry with the presets.
double neumann_consistency(double alpha, double t0);

// Newton refinement of neumann_consistency(alpha) = 1 starting from `guess`.
double neumann_root(double guess = kExample2AlphaTabulated);

struct PhysicalParameters {
  double diffusivity = 1.0;
  double conductivity = 1.0;
  double latent_heat = 1.0;
  double density = 1.0;
  double melt_temperature = 0.0;
};

// Linear boundary s(t) = p0 + p1 t with the travelling-wave exact solution
// u = u* - c + c exp(k (p1 t - x + p0)), k = p1/a^2, c = L gamma a^2 / lambda.
StefanProblem linear_boundary_problem(const PhysicalParameters& params, double p0, double p1,
                                      double horizon);

// Square-root boundary s(t) = 2 alpha sqrt(t + t0) with the similarity solution
// u = u* + K (1 - erf(x / (2 a sqrt(t + t0))) / erf(alpha / a)), K fixed by the Stefan condition.
StefanProblem sqrt_boundary_problem(const PhysicalParameters& params, double alpha, double t0,
                                    double horizon);

}  // namespace chpm
