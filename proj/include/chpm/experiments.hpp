#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chpm/assembly.hpp"
#include "chpm/basis.hpp"
#include "chpm/metrics.hpp"
#include "chpm/noise.hpp"
#include "chpm/problem.hpp"

namespace chpm {

// Benchmark preset or one of the closed-form custom families.
struct ProblemSpec {
  enum class Kind { Example1, Example2, Linear, Sqrt };

  Kind kind = Kind::Example1;
  PhysicalParameters params;
  double p0 = 0.5;     // Linear: s(0)
  double p1 = 0.5;     // Linear: s'(t)
  double alpha = 0.5;  // Sqrt
  double t0 = 0.25;    // Sqrt

  static ProblemSpec benchmark(BenchmarkId id);
  std::optional<BenchmarkId> benchmark_id() const;
  std::string name() const;
  StefanProblem build(double horizon) const;
};

ProblemSpec::Kind parse_problem_kind(const std::string& name);

// How a horizon T is studied: collocate on [0, T], or collocate on a fixed
// fit horizon and measure the errors on [0, T].
enum class HorizonMode { Refit, Extrapolate };

struct RunSpec {
  ProblemSpec problem;
  int order = 12;
  double beta = 0.0;
  std::optional<CollocationScheme> scheme;  // preset/default when empty
  int quadrature_order = 16;
  NoiseSpec noise;
  double horizon = 1.0;
  std::optional<double> fit_horizon;  // collocation horizon; defaults to `horizon`
  BasisScaling scaling = BasisScaling::Normalized;
  int samples = 101;

  CollocationScheme resolved_scheme() const;
};

struct SolveReport {
  RunSpec spec;
  CollocationScheme scheme;
  std::vector<double> coeffs;
  double delta_p = 0.0;
  double delta_u = 0.0;
  double condition_number = 0.0;
  double relative_residual = 0.0;
  double max_abs_flux_error = 0.0;
  std::vector<FluxSample> flux_curve;
};

// Assemble, solve (direct at beta = 0, Tikhonov otherwise), evaluate. Throws
// DomainError / NumericalError.
SolveReport run_solve(const RunSpec& spec);

struct SweepGrid {
  ProblemSpec problem;
  std::vector<int> orders{4, 6, 8, 10, 12, 14, 16, 18, 20};
  std::vector<double> betas{0.0};
  std::vector<double> noise_levels{0.0};
  std::vector<std::uint64_t> seeds{0};
  std::vector<double> horizons{1.0};
  std::optional<CollocationScheme> scheme_override;
  std::optional<double> fit_horizon;
  int quadrature_order = 16;
  NoiseMode noise_mode = NoiseMode::RelativeToGradient;
  BasisScaling scaling = BasisScaling::Normalized;

  void validate() const;
};

struct CellRecord {
  int order = 0;
  double beta = 0.0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  double horizon = 1.0;
  CollocationScheme scheme;
  double delta_p = 0.0;
  double delta_u = 0.0;
  double condition_number = 0.0;
  double residual_norm = 0.0;
  double wall_time = 0.0;  // seconds
  std::string error_tag;   // empty on success

  bool ok() const noexcept { return error_tag.empty(); }
};

// Aggregate over seeds of one (N, beta, eps, T) cell.
struct CellSummary {
  int order = 0;
  double beta = 0.0;
  double eps = 0.0;
  double horizon = 1.0;
  int seed_count = 0;
  int failures = 0;
  double delta_p_median = 0.0;
  double delta_p_iqr = 0.0;
  double delta_u_median = 0.0;
  double condition_number = 0.0;
  std::string error_tag;  // first failure, if any
};

struct SweepResult {
  std::string problem_name;
  std::vector<CellRecord> records;     // grid order, seeds innermost
  std::vector<CellSummary> summaries;  // grid order

  const CellSummary* find(int order, double beta, double eps, double horizon) const;
};

// Runs every (N, beta, eps, T, seed) cell; failures are recorded, never thrown.
// Up to `jobs` cells run concurrently; output order does not depend on jobs.
SweepResult run_sweep(const SweepGrid& grid, int jobs = 1);

struct HorizonRatio {
  int order;
  double horizon;
  double ratio;  // delta_p(T) / delta_p(reference horizon)
};

struct HorizonStudy {
  SweepResult result;
  double reference_horizon = 1.0;
  std::vector<HorizonRatio> ratios;
};

// Clean sweep over T x N. In Extrapolate mode the collocation horizon is
// fixed at `fit_horizon`.
HorizonStudy horizon_study(BenchmarkId benchmark, const std::vector<double>& horizons,
                           const std::vector<int>& orders, HorizonMode mode = HorizonMode::Refit,
                           double fit_horizon = 1.0, int jobs = 1);

SweepResult noise_study(BenchmarkId benchmark, const std::vector<int>& orders,
                        const std::vector<double>& betas, const std::vector<double>& levels,
                        const std::vector<std::uint64_t>& seeds, int jobs = 1);

// Median and interquartile range with linear interpolation between order statistics.
double median(std::vector<double> values);
double interquartile_range(std::vector<double> values);

}  // namespace chpm
