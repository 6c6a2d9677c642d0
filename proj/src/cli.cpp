#include "chpm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chpm/errors.hpp"
#include "chpm/experiments.hpp"
#include "chpm/io.hpp"

namespace chpm::cli {

namespace {

struct Options {
  std::string benchmark = "example1";
  std::string problem;
  PhysicalParameters params;
  double p0 = 0.5;
  double p1 = 0.5;
  double alpha = 0.5;
  double t0 = 0.25;

  int order = 12;
  double beta = 0.0;
  std::string scheme;
  int quad = 16;
  double noise = 0.0;
  std::string noise_mode = "relative";
  std::uint64_t seed = 0;
  double horizon = 1.0;
  std::optional<double> fit_horizon;
  int samples = 101;
  std::string basis = "normalized";
  std::string out = ".";
  int jobs = 1;

  std::vector<int> orders;
  std::vector<double> betas;
  std::vector<double> noise_levels;
  std::vector<std::uint64_t> seeds;
  std::vector<double> horizons;
};

void add_options(CLI::App& app, Options& o) {
  app.add_option("--benchmark", o.benchmark, "Preset problem")
      ->check(CLI::IsMember({"example1", "example2"}));
  app.add_option("--problem", o.problem, "Custom boundary family")
      ->check(CLI::IsMember({"linear", "sqrt"}));
  app.add_option("--diffusivity", o.params.diffusivity);
  app.add_option("--conductivity", o.params.conductivity);
  app.add_option("--latent-heat", o.params.latent_heat);
  app.add_option("--density", o.params.density);
  app.add_option("--melt-temperature", o.params.melt_temperature);
  app.add_option("--p0", o.p0, "linear: s(0)");
  app.add_option("--p1", o.p1, "linear: s'(t)");
  app.add_option("--alpha", o.alpha, "sqrt: s = 2 alpha sqrt(t + t0)");
  app.add_option("--t0", o.t0, "sqrt: time shift");

  app.add_option("--order", o.order, "Basis order N");
  app.add_option("--beta", o.beta, "Tikhonov parameter");
  app.add_option("--scheme", o.scheme, "Row partition nD,nS,nI");
  app.add_option("--quad", o.quad, "Gauss-Legendre order per subinterval");
  app.add_option("--noise", o.noise, "Noise level");
  app.add_option("--noise-mode", o.noise_mode)->check(CLI::IsMember({"relative", "constant"}));
  app.add_option("--seed", o.seed);
  app.add_option("--horizon", o.horizon, "Time horizon T");
  app.add_option("--fit-horizon", o.fit_horizon, "Collocation horizon (errors still on [0, T])");
  app.add_option("--samples", o.samples, "Flux curve samples");
  app.add_option("--basis", o.basis)->check(CLI::IsMember({"normalized", "classical"}));
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--jobs", o.jobs, "Sweep worker threads");

  app.add_option("--orders", o.orders)->delimiter(',');
  app.add_option("--betas", o.betas)->delimiter(',');
  app.add_option("--noise-levels", o.noise_levels)->delimiter(',');
  app.add_option("--seeds", o.seeds)->delimiter(',');
  app.add_option("--horizons", o.horizons)->delimiter(',');
}

ProblemSpec problem_spec(const Options& o) {
  ProblemSpec p;
  p.kind = parse_problem_kind(o.problem.empty() ? o.benchmark : o.problem);
  p.params = o.params;
  p.p0 = o.p0;
  p.p1 = o.p1;
  p.alpha = o.alpha;
  p.t0 = o.t0;
  return p;
}

RunSpec run_spec(const Options& o) {
  RunSpec spec;
  spec.problem = problem_spec(o);
  spec.order = o.order;
  spec.beta = o.beta;
  spec.quadrature_order = o.quad;
  if (!o.scheme.empty()) {
    CollocationScheme s = parse_scheme(o.scheme);
    if (std::count(o.scheme.begin(), o.scheme.end(), ',') < 3) s.quadrature_order = o.quad;
    spec.scheme = s;
  }
  spec.noise = NoiseSpec{o.noise, o.seed, parse_noise_mode(o.noise_mode)};
  spec.horizon = o.horizon;
  spec.fit_horizon = o.fit_horizon;
  spec.scaling = parse_basis_scaling(o.basis);
  spec.samples = o.samples;
  if (spec.samples < 2) throw DomainError("--samples must be at least 2");
  return spec;
}

std::filesystem::path output_dir(const Options& o) {
  std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DomainError("cannot create output directory '" + o.out + "': " + ec.message());
  return dir;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const RunSpec spec = run_spec(o);
  const auto dir = output_dir(o);
  const SolveReport r = run_solve(spec);
  io::write_file(dir / "report.json", io::report_json(r));
  io::write_file(dir / "flux_curve.csv", io::flux_curve_csv(r.flux_curve));
  out << "scheme " << format_scheme(r.scheme) << "  delta_p " << io::format_number(r.delta_p)
      << "  delta_u " << io::format_number(r.delta_u) << "  cond "
      << io::format_number(r.condition_number) << "\n";
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const RunSpec base = run_spec(o);
  SweepGrid grid;
  grid.problem = base.problem;
  if (!o.orders.empty()) grid.orders = o.orders;
  grid.betas = o.betas.empty() ? std::vector<double>{o.beta} : o.betas;
  grid.noise_levels = o.noise_levels.empty() ? std::vector<double>{o.noise} : o.noise_levels;
  grid.seeds = o.seeds.empty() ? std::vector<std::uint64_t>{o.seed} : o.seeds;
  grid.horizons = o.horizons.empty() ? std::vector<double>{o.horizon} : o.horizons;
  grid.scheme_override = base.scheme;
  grid.fit_horizon = base.fit_horizon;
  grid.quadrature_order = base.quadrature_order;
  grid.noise_mode = base.noise.mode;
  grid.scaling = base.scaling;
  grid.validate();

  const auto dir = output_dir(o);
  const SweepResult result = run_sweep(grid, o.jobs);
  io::write_file(dir / "sweep.csv", io::sweep_csv(result));
  io::write_file(dir / "table1_style.csv", io::table1_csv(result));
  int failures = 0;
  for (const auto& s : result.summaries) failures += s.failures;
  out << result.summaries.size() << " cells, " << failures << " failed runs\n";
  return kExitOk;
}

int cmd_plotdata(const Options& o, std::ostream& out) {
  RunSpec spec = run_spec(o);
  const std::vector<double> levels =
      o.noise_levels.empty() ? std::vector<double>{o.noise} : o.noise_levels;
  const auto dir = output_dir(o);
  for (double level : levels) {
    spec.noise.level = level;
    const SolveReport r = run_solve(spec);
    const std::string suffix = io::format_short(level);
    io::write_file(dir / ("flux_eps_" + suffix + ".csv"), io::flux_series_csv(r.flux_curve));
    io::write_file(dir / ("abs_error_eps_" + suffix + ".csv"), io::abs_error_csv(r.flux_curve));
    out << "eps " << suffix << "  max_abs_error " << io::format_number(r.max_abs_flux_error)
        << "\n";
  }
  return kExitOk;
}

int fail(std::ostream& err, const std::string& tag, const std::string& message, int code) {
  err << nlohmann::json{{"error", tag}, {"message", message}}.dump() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collocation heat-polynomial solver for the inverse one-phase Stefan problem",
               "chpm"};
  Options o;
  add_options(app, o);
  app.set_config("--config", "", "key = value file; flags override file values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  auto* solve_cmd = app.add_subcommand("solve", "Single solve: report.json, flux_curve.csv");
  auto* sweep_cmd = app.add_subcommand("sweep", "Grid over N, beta, eps, seeds, T");
  auto* plot_cmd = app.add_subcommand("plotdata", "Per-noise-level flux curves");
  for (auto* sub : {solve_cmd, sweep_cmd, plot_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, "config", e.what(), kExitConfig);
  }
  if (!o.problem.empty() && app.count("--benchmark") > 0) {
    return fail(err, "config", "--problem and --benchmark are mutually exclusive", kExitConfig);
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    return cmd_plotdata(o, out);
  } catch (const NumericalError& e) {
    return fail(err, e.tag(), e.what(), kExitNumerical);
  } catch (const DomainError& e) {
    return fail(err, "config", e.what(), kExitConfig);
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(err, "io", e.what(), kExitConfig);
  }
}

}  // namespace chpm::cli
