#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "chpm/assembly.hpp"
#include "chpm/basis.hpp"
#include "chpm/errors.hpp"
#include "chpm/experiments.hpp"
#include "chpm/problem.hpp"

namespace py = pybind11;
using namespace chpm;

namespace {

py::dict report_dict(const SolveReport& r) {
  py::dict d;
  d["problem"] = r.spec.problem.name();
  d["order"] = r.spec.order;
  d["beta"] = r.spec.beta;
  d["scheme"] = py::make_tuple(r.scheme.n_dirichlet, r.scheme.n_stefan, r.scheme.n_initial,
                               r.scheme.quadrature_order);
  d["coefficients"] = r.coeffs;
  d["delta_p"] = r.delta_p;
  d["delta_u"] = r.delta_u;
  d["condition_number"] = r.condition_number;
  d["relative_residual"] = r.relative_residual;
  d["max_abs_flux_error"] = r.max_abs_flux_error;
  std::vector<double> t, rec, exact;
  for (const auto& s : r.flux_curve) {
    t.push_back(s.t);
    rec.push_back(s.reconstructed);
    exact.push_back(s.exact);
  }
  d["t"] = t;
  d["ux0_reconstructed"] = rec;
  d["ux0_exact"] = exact;
  return d;
}

std::optional<CollocationScheme> scheme_arg(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_scheme(*text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heat-polynomial collocation for the inverse one-phase Stefan problem";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<HeatPolynomialBasis>(m, "HeatPolynomialBasis")
      .def(py::init([](double a, int max_order, const std::string& scaling) {
             return HeatPolynomialBasis(a, max_order, parse_basis_scaling(scaling));
           }),
           py::arg("diffusivity"), py::arg("max_order"), py::arg("scaling") = "classical")
      .def("eval", &HeatPolynomialBasis::eval, py::arg("n"), py::arg("x"), py::arg("t"))
      .def("eval_dx", &HeatPolynomialBasis::eval_dx, py::arg("n"), py::arg("x"), py::arg("t"))
      .def("eval_dxx", &HeatPolynomialBasis::eval_dxx, py::arg("n"), py::arg("x"), py::arg("t"))
      .def("eval_dt", &HeatPolynomialBasis::eval_dt, py::arg("n"), py::arg("x"), py::arg("t"))
      .def(
          "term_coefficients",
          [](const HeatPolynomialBasis& b, int n) {
            const auto row = b.term_coefficients(n);
            return std::vector<double>(row.begin(), row.end());
          },
          py::arg("n"))
      .def("__len__", &HeatPolynomialBasis::size);

  m.def("neumann_root", &neumann_root, py::arg("guess") = kExample2AlphaTabulated);
  m.def("neumann_consistency", &neumann_consistency, py::arg("alpha"),
        py::arg("t0") = kExample2T0);

  m.def(
      "solve",
      [](const std::string& benchmark, int order, double beta,
         const std::optional<std::string>& scheme, int quad, double noise, std::uint64_t seed,
         const std::string& noise_mode, double horizon, std::optional<double> fit_horizon,
         const std::string& basis, int samples) {
        RunSpec spec;
        spec.problem.kind = parse_problem_kind(benchmark);
        spec.order = order;
        spec.beta = beta;
        spec.scheme = scheme_arg(scheme);
        spec.quadrature_order = quad;
        spec.noise = NoiseSpec{noise, seed, parse_noise_mode(noise_mode)};
        spec.horizon = horizon;
        spec.fit_horizon = fit_horizon;
        spec.scaling = parse_basis_scaling(basis);
        spec.samples = samples;
        SolveReport r;
        {
          py::gil_scoped_release release;
          r = run_solve(spec);
        }
        return report_dict(r);
      },
      py::arg("benchmark") = "example1", py::arg("order") = 12, py::arg("beta") = 0.0,
      py::arg("scheme") = py::none(), py::arg("quad") = 16, py::arg("noise") = 0.0,
      py::arg("seed") = 0, py::arg("noise_mode") = "relative", py::arg("horizon") = 1.0,
      py::arg("fit_horizon") = py::none(), py::arg("basis") = "normalized",
      py::arg("samples") = 101);

  m.def(
      "sweep",
      [](const std::string& benchmark, std::vector<int> orders, std::vector<double> betas,
         std::vector<double> noise_levels, std::vector<std::uint64_t> seeds,
         std::vector<double> horizons, int jobs) {
        SweepGrid grid;
        grid.problem.kind = parse_problem_kind(benchmark);
        grid.orders = std::move(orders);
        grid.betas = std::move(betas);
        grid.noise_levels = std::move(noise_levels);
        grid.seeds = std::move(seeds);
        grid.horizons = std::move(horizons);
        SweepResult result;
        {
          py::gil_scoped_release release;
          result = run_sweep(grid, jobs);
        }
        py::list rows;
        for (const auto& s : result.summaries) {
          py::dict d;
          d["N"] = s.order;
          d["beta"] = s.beta;
          d["eps"] = s.eps;
          d["T"] = s.horizon;
          d["seed_count"] = s.seed_count;
          d["failures"] = s.failures;
          d["delta_p_median"] = s.delta_p_median;
          d["delta_p_iqr"] = s.delta_p_iqr;
          d["delta_u_median"] = s.delta_u_median;
          d["cond"] = s.condition_number;
          rows.append(d);
        }
        return rows;
      },
      py::arg("benchmark") = "example1",
      py::arg("orders") = std::vector<int>{4, 6, 8, 10, 12, 14, 16, 18, 20},
      py::arg("betas") = std::vector<double>{0.0},
      py::arg("noise_levels") = std::vector<double>{0.0},
      py::arg("seeds") = std::vector<std::uint64_t>{0},
      py::arg("horizons") = std::vector<double>{1.0}, py::arg("jobs") = 1);
}
