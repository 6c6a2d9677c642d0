#include "chpm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "chpm/errors.hpp"
#include "chpm/solver.hpp"

namespace chpm {

ProblemSpec ProblemSpec::benchmark(BenchmarkId id) {
  ProblemSpec s;
  s.kind = id == BenchmarkId::Example1 ? Kind::Example1 : Kind::Example2;
  return s;
}

std::optional<BenchmarkId> ProblemSpec::benchmark_id() const {
  switch (kind) {
    case Kind::Example1:
      return BenchmarkId::Example1;
    case Kind::Example2:
      return BenchmarkId::Example2;
    default:
      return std::nullopt;
  }
}

std::string ProblemSpec::name() const {
  switch (kind) {
    case Kind::Example1:
      return "example1";
    case Kind::Example2:
      return "example2";
    case Kind::Linear:
      return "linear";
    case Kind::Sqrt:
      return "sqrt";
  }
  return "unknown";
}

StefanProblem ProblemSpec::build(double horizon) const {
  switch (kind) {
    case Kind::Example1:
      return example1(horizon);
    case Kind::Example2:
      return example2(horizon);
    case Kind::Linear:
      return linear_boundary_problem(params, p0, p1, horizon);
    case Kind::Sqrt:
      return sqrt_boundary_problem(params, alpha, t0, horizon);
  }
  throw DomainError("unknown problem kind");
}

ProblemSpec::Kind parse_problem_kind(const std::string& name) {
  if (name == "example1") return ProblemSpec::Kind::Example1;
  if (name == "example2") return ProblemSpec::Kind::Example2;
  if (name == "linear") return ProblemSpec::Kind::Linear;
  if (name == "sqrt") return ProblemSpec::Kind::Sqrt;
  throw DomainError("unknown problem '" + name + "'");
}

CollocationScheme RunSpec::resolved_scheme() const {
  CollocationScheme s;
  if (scheme) {
    s = *scheme;
  } else if (auto id = problem.benchmark_id()) {
    s = preset_scheme(*id, order);
  } else {
    s = default_scheme(order);
  }
  s.quadrature_order = scheme ? scheme->quadrature_order : quadrature_order;
  return s;
}

SolveReport run_solve(const RunSpec& spec) {
  if (spec.order < 0) throw DomainError("order must be non-negative");
  spec.noise.validate();
  const StefanProblem target = spec.problem.build(spec.horizon);
  const StefanProblem fitted =
      spec.fit_horizon ? spec.problem.build(*spec.fit_horizon) : target;
  const HeatPolynomialBasis basis(target.diffusivity, spec.order, spec.scaling);

  SolveReport report;
  report.spec = spec;
  report.scheme = spec.resolved_scheme();
  const LinearSystem system =
      assemble(fitted, basis, report.scheme, stefan_data_for(fitted, spec.noise));
  const Solution sol = solve(system, SolveConfig::for_beta(spec.beta));
  for (double c : sol.coeffs) {
    if (!std::isfinite(c)) throw NumericalError("solver produced non-finite coefficients", "non_finite");
  }
  report.coeffs = sol.coeffs;
  report.relative_residual = sol.relative_residual;
  report.condition_number = condition_number(system, spec.beta);
  if (target.has_exact_flux()) report.delta_p = delta_p(sol.coeffs, target, basis);
  if (target.has_exact_solution()) report.delta_u = delta_u(sol.coeffs, target, basis);
  report.flux_curve = flux_curve(sol.coeffs, target, basis, spec.samples);
  for (const auto& s : report.flux_curve) {
    report.max_abs_flux_error = std::max(report.max_abs_flux_error, s.abs_error);
  }
  return report;
}

void SweepGrid::validate() const {
  if (orders.empty() || betas.empty() || noise_levels.empty() || seeds.empty() ||
      horizons.empty()) {
    throw DomainError("sweep grid axes must be non-empty");
  }
  for (int n : orders) {
    if (n < 2) throw DomainError("sweep orders must be at least 2");
  }
  for (double b : betas) {
    if (!(b >= 0.0)) throw DomainError("sweep betas must be non-negative");
  }
  for (double e : noise_levels) {
    if (!(e >= 0.0)) throw DomainError("sweep noise levels must be non-negative");
  }
  for (double t : horizons) {
    if (!(t > 0.0)) throw DomainError("sweep horizons must be positive");
  }
}

const CellSummary* SweepResult::find(int order, double beta, double eps, double horizon) const {
  for (const auto& s : summaries) {
    if (s.order == order && s.beta == beta && s.eps == eps && s.horizon == horizon) return &s;
  }
  return nullptr;
}

namespace {

double quantile(std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct CellKey {
  int order;
  double beta;
  double eps;
  double horizon;
  std::uint64_t seed;
};

CellRecord run_cell(const SweepGrid& grid, const CellKey& key) {
  CellRecord rec;
  rec.order = key.order;
  rec.beta = key.beta;
  rec.eps = key.eps;
  rec.seed = key.seed;
  rec.horizon = key.horizon;

  RunSpec spec;
  spec.problem = grid.problem;
  spec.order = key.order;
  spec.beta = key.beta;
  spec.scheme = grid.scheme_override;
  spec.quadrature_order = grid.quadrature_order;
  spec.noise = NoiseSpec{key.eps, key.seed, grid.noise_mode};
  spec.horizon = key.horizon;
  spec.fit_horizon = grid.fit_horizon;
  spec.scaling = grid.scaling;
  spec.samples = 2;

  const auto start = std::chrono::steady_clock::now();
  try {
    rec.scheme = spec.resolved_scheme();
    const SolveReport r = run_solve(spec);
    rec.delta_p = r.delta_p;
    rec.delta_u = r.delta_u;
    rec.condition_number = r.condition_number;
    rec.residual_norm = r.relative_residual;
  } catch (const NumericalError& e) {
    rec.error_tag = e.tag();
  } catch (const DomainError&) {
    rec.error_tag = "domain";
  }
  rec.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile(values, 0.5);
}

double interquartile_range(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile(values, 0.75) - quantile(values, 0.25);
}

SweepResult run_sweep(const SweepGrid& grid, int jobs) {
  grid.validate();
  std::vector<CellKey> keys;
  for (double horizon : grid.horizons)
    for (double eps : grid.noise_levels)
      for (double beta : grid.betas)
        for (int order : grid.orders)
          for (std::uint64_t seed : grid.seeds) keys.push_back({order, beta, eps, horizon, seed});

  SweepResult result;
  result.problem_name = grid.problem.name();
  result.records.resize(keys.size());

  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      result.records[i] = run_cell(grid, keys[i]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const std::size_t per_cell = grid.seeds.size();
  for (std::size_t start = 0; start < result.records.size(); start += per_cell) {
    const CellRecord& first = result.records[start];
    CellSummary s;
    s.order = first.order;
    s.beta = first.beta;
    s.eps = first.eps;
    s.horizon = first.horizon;
    s.seed_count = static_cast<int>(per_cell);
    std::vector<double> dp, du, cond;
    for (std::size_t k = start; k < start + per_cell; ++k) {
      const CellRecord& r = result.records[k];
      if (!r.ok()) {
        ++s.failures;
        if (s.error_tag.empty()) s.error_tag = r.error_tag;
        continue;
      }
      dp.push_back(r.delta_p);
      du.push_back(r.delta_u);
      cond.push_back(r.condition_number);
    }
    s.delta_p_median = median(dp);
    s.delta_p_iqr = dp.empty() ? std::numeric_limits<double>::quiet_NaN() : interquartile_range(dp);
    s.delta_u_median = median(du);
    s.condition_number = median(cond);
    result.summaries.push_back(s);
  }
  return result;
}

HorizonStudy horizon_study(BenchmarkId benchmark, const std::vector<double>& horizons,
                           const std::vector<int>& orders, HorizonMode mode, double fit_horizon,
                           int jobs) {
  SweepGrid grid;
  grid.problem = ProblemSpec::benchmark(benchmark);
  grid.orders = orders;
  grid.horizons = horizons;
  if (mode == HorizonMode::Extrapolate) grid.fit_horizon = fit_horizon;

  HorizonStudy study;
  study.result = run_sweep(grid, jobs);
  study.reference_horizon =
      std::find(horizons.begin(), horizons.end(), 1.0) != horizons.end() ? 1.0 : horizons.front();
  for (const auto& s : study.result.summaries) {
    const CellSummary* ref = study.result.find(s.order, s.beta, s.eps, study.reference_horizon);
    const double ratio = ref ? s.delta_p_median / ref->delta_p_median
                             : std::numeric_limits<double>::quiet_NaN();
    study.ratios.push_back({s.order, s.horizon, ratio});
  }
  return study;
}

SweepResult noise_study(BenchmarkId benchmark, const std::vector<int>& orders,
                        const std::vector<double>& betas, const std::vector<double>& levels,
                        const std::vector<std::uint64_t>& seeds, int jobs) {
  for (double e : levels) {
    if (e < 0.0 || e > 0.2) throw DomainError("noise study levels must lie in [0, 0.2]");
  }
  SweepGrid grid;
  grid.problem = ProblemSpec::benchmark(benchmark);
  grid.orders = orders;
  grid.betas = betas;
  grid.noise_levels = levels;
  grid.seeds = seeds;
  return run_sweep(grid, jobs);
}

}  // namespace chpm
