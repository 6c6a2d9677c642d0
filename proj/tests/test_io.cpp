#include <doctest.h>

#include <clocale>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <string>

#include "chpm/experiments.hpp"
#include "chpm/io.hpp"

namespace io = chpm::io;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("number formatting") {
    CHECK(io::format_number(0.1) == "0.10000000000000001");
    CHECK(io::format_number(1.0) == "1");
    CHECK(io::format_number(-2.5e-300) == "-2.5e-300");
    CHECK(io::format_number(1.0 / 3.0) == "0.33333333333333331");
    CHECK(io::format_number(NAN) == "nan");
    CHECK(io::format_number(-INFINITY) == "-inf");
    CHECK(io::format_short(0.01) == "0.01");
    CHECK(io::format_short(0.0) == "0");
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, 2.2250738585072014e-308}) {
      CHECK(std::stod(io::format_number(v)) == v);
    }
  }

  TEST_CASE("formatting ignores the C locale") {
    const char* previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous ? previous : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
      CHECK(io::format_number(0.5) == "0.5");
      std::setlocale(LC_NUMERIC, saved.c_str());
    }
    CHECK(io::format_number(0.5) == "0.5");
  }

  TEST_CASE("report json") {
    chpm::RunSpec spec;
    spec.order = 6;
    spec.noise = {0.01, 42};
    const auto rep = chpm::run_solve(spec);
    const auto j = nlohmann::json::parse(io::report_json(rep));
    CHECK(j["schema_version"] == 1);
    CHECK(j["problem"] == "example1");
    CHECK(j["order"] == 6);
    CHECK(j["noise"]["seed"] == 42);
    CHECK(j["noise"]["mode"] == "relative");
    CHECK(j["scheme"]["n_dirichlet"] == 3);
    CHECK(j["coefficients"].size() == 7);
    CHECK(j["delta_p"].get<double>() == rep.delta_p);
    CHECK(j["condition_number"].get<double>() == rep.condition_number);
    CHECK(j.contains("relative_residual"));
  }

  TEST_CASE("csv layouts") {
    chpm::RunSpec spec;
    spec.order = 4;
    spec.samples = 5;
    const auto rep = chpm::run_solve(spec);
    const auto curve = io::flux_curve_csv(rep.flux_curve);
    CHECK(curve.rfind("t,ux0_reconstructed,ux0_exact,abs_error\n", 0) == 0);
    CHECK(count_lines(curve) == 6);
    CHECK(io::flux_series_csv(rep.flux_curve).rfind("t,ux0_reconstructed,ux0_exact\n", 0) == 0);
    CHECK(io::abs_error_csv(rep.flux_curve).rfind("t,abs_error\n", 0) == 0);

    chpm::SweepGrid g;
    g.orders = {4, 6};
    g.betas = {0.0, 1e-6, 1e-3};
    const auto result = chpm::run_sweep(g);
    const auto sweep = io::sweep_csv(result);
    CHECK(sweep.rfind("benchmark,N,beta,eps,seed_count,T,delta_p_median,delta_p_iqr,"
                      "delta_u_median,cond,failures\n",
                      0) == 0);
    CHECK(count_lines(sweep) == 7);
    const auto table = io::table1_csv(result);
    std::istringstream lines(table);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == "eps,T,beta,4,6");
    std::getline(lines, row);
    CHECK(row.rfind("0,1,0,", 0) == 0);
    CHECK(row == "0,1,0," + io::format_number(result.find(4, 0.0, 0.0, 1.0)->delta_p_median) +
                     "," + io::format_number(result.find(6, 0.0, 0.0, 1.0)->delta_p_median));
    CHECK(count_lines(table) == 4);
  }
}
