#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chpm/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chpm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = chpm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("chpm_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve writes the report and flux curve") {
    const auto dir = scratch("solve");
    const auto r = run({"solve", "--benchmark", "example1", "--order", "12", "--beta", "0",
                        "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(j["schema_version"] == 1);
    CHECK(j["delta_p"].get<double>() <= 1e-5);
    CHECK(j["coefficients"].size() == 13);
    const auto curve = slurp(dir / "flux_curve.csv");
    CHECK(curve.rfind("t,ux0_reconstructed,ux0_exact,abs_error\n", 0) == 0);
    CHECK(count_lines(curve) == 102);
  }

  TEST_CASE("noisy solves are reproducible") {
    const auto a = scratch("noisy_a");
    const auto b = scratch("noisy_b");
    for (const auto& dir : {a, b}) {
      REQUIRE(run({"solve", "--benchmark", "example1", "--order", "12", "--beta", "0", "--noise",
                   "0.01", "--seed", "7", "--out", dir.string()})
                  .code == 0);
    }
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
    CHECK(slurp(a / "flux_curve.csv") == slurp(b / "flux_curve.csv"));
    const auto j = nlohmann::json::parse(slurp(a / "report.json"));
    CHECK(j["noise"]["seed"] == 7);
  }

  TEST_CASE("minimal square system") {
    const auto dir = scratch("order3");
    const auto r = run({"solve", "--order", "3", "--scheme", "2,1,1", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(j["coefficients"].size() == 4);
    CHECK(j["scheme"]["n_dirichlet"] == 2);
  }

  TEST_CASE("exit codes") {
    const auto dir = scratch("errors");
    auto r = run({"solve", "--order", "12", "--scheme", "2,1,1", "--out", dir.string()});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.err)["error"] == "config");
    CHECK(run({"solve", "--benchmark", "example9"}).code == 2);
    CHECK(run({"solve", "--order", "twelve"}).code == 2);
    CHECK(run({"solve", "--noise", "-1", "--out", dir.string()}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"solve", "--problem", "linear", "--benchmark", "example2"}).code == 2);
    r = run({"solve", "--order", "30", "--out", dir.string()});
    CHECK(r.code == 3);
    CHECK(nlohmann::json::parse(r.err)["error"] == "singular");
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("config file with flag overrides") {
    const auto dir = scratch("config");
    fs::create_directories(dir);
    {
      std::ofstream cfg(dir / "run.ini");
      cfg << "# solve settings\nbenchmark = example2\norder = 8\nbeta = 1e-6\nout = "
          << (dir / "from_file").string() << "\n";
    }
    auto r = run({"solve", "--config", (dir / "run.ini").string(), "--order", "10"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "from_file" / "report.json"));
    CHECK(j["problem"] == "example2");
    CHECK(j["order"] == 10);
    CHECK(j["beta"].get<double>() == 1e-6);
    {
      std::ofstream cfg(dir / "bad.ini");
      cfg << "orderz = 8\n";
    }
    CHECK(run({"solve", "--config", (dir / "bad.ini").string()}).code == 2);
  }

  TEST_CASE("custom problems") {
    const auto dir = scratch("custom");
    auto r = run({"solve", "--problem", "linear", "--p0", "0.3", "--p1", "0.8", "--order", "10",
                  "--out", dir.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(j["problem"] == "linear");
    CHECK(j["delta_p"].get<double>() < 1e-3);
    double previous = 1.0;
    for (const char* order : {"6", "10", "14"}) {
      r = run({"solve", "--problem", "sqrt", "--alpha", "0.4", "--t0", "0.3", "--diffusivity",
               "0.9", "--order", order, "--out", dir.string()});
      REQUIRE(r.code == 0);
      j = nlohmann::json::parse(slurp(dir / "report.json"));
      CHECK(j["problem"] == "sqrt");
      CHECK(j["delta_p"].get<double>() < previous);
      previous = j["delta_p"].get<double>();
    }
  }

  TEST_CASE("sweep outputs") {
    const auto dir = scratch("sweep");
    const auto r = run({"sweep", "--orders", "4,6,8,10,12", "--betas", "0,1e-6", "--out",
                        dir.string()});
    REQUIRE(r.code == 0);
    const auto sweep = slurp(dir / "sweep.csv");
    CHECK(count_lines(sweep) == 11);
    const auto table = slurp(dir / "table1_style.csv");
    CHECK(table.rfind("eps,T,beta,4,6,8,10,12\n", 0) == 0);

    // The cond column increases down the N axis at beta = 0.
    std::istringstream lines(sweep);
    std::string line;
    std::getline(lines, line);
    double previous = 0.0;
    while (std::getline(lines, line)) {
      std::vector<std::string> cols;
      std::istringstream cells(line);
      for (std::string c; std::getline(cells, c, ',');) cols.push_back(c);
      REQUIRE(cols.size() == 11);
      if (std::stod(cols[2]) != 0.0) continue;
      const double cond = std::stod(cols[9]);
      CHECK(cond > previous);
      previous = cond;
    }
  }

  TEST_CASE("single-cell sweep equals the solve") {
    const auto a = scratch("cell_sweep");
    const auto b = scratch("cell_solve");
    REQUIRE(run({"sweep", "--orders", "8", "--betas", "1e-9", "--out", a.string()}).code == 0);
    REQUIRE(run({"solve", "--order", "8", "--beta", "1e-9", "--out", b.string()}).code == 0);
    const auto j = nlohmann::json::parse(slurp(b / "report.json"));
    std::istringstream lines(slurp(a / "sweep.csv"));
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    std::vector<std::string> cols;
    std::istringstream cells(line);
    for (std::string c; std::getline(cells, c, ',');) cols.push_back(c);
    CHECK(std::stod(cols[6]) == j["delta_p"].get<double>());
    CHECK(std::stod(cols[8]) == j["delta_u"].get<double>());
    CHECK(std::stod(cols[9]) == j["condition_number"].get<double>());
  }

  TEST_CASE("sweeps are byte-identical across runs and worker counts") {
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    const auto c = scratch("det_c");
    const std::vector<std::string> grid{"sweep", "--orders", "4,8,12,16", "--betas", "0,1e-7",
                                        "--noise-levels", "0,0.01", "--seeds", "1,2,3"};
    auto with = [&](const fs::path& dir, const std::string& jobs) {
      auto args = grid;
      args.insert(args.end(), {"--jobs", jobs, "--out", dir.string()});
      return run(args).code;
    };
    REQUIRE(with(a, "1") == 0);
    REQUIRE(with(b, "1") == 0);
    REQUIRE(with(c, "4") == 0);
    CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));
    CHECK(slurp(a / "sweep.csv") == slurp(c / "sweep.csv"));
    CHECK(slurp(a / "table1_style.csv") == slurp(c / "table1_style.csv"));
  }

  TEST_CASE("plot data per noise level") {
    const auto dir = scratch("plot");
    const auto r = run({"plotdata", "--order", "12", "--noise-levels", "0.01,0.03,0.05",
                        "--samples", "57", "--out", dir.string()});
    REQUIRE(r.code == 0);
    for (const char* level : {"0.01", "0.03", "0.05"}) {
      const auto flux = slurp(dir / (std::string("flux_eps_") + level + ".csv"));
      const auto err = slurp(dir / (std::string("abs_error_eps_") + level + ".csv"));
      CHECK(count_lines(flux) == 58);
      CHECK(count_lines(err) == 58);
      std::istringstream lines(flux);
      std::string line;
      std::getline(lines, line);
      CHECK(line == "t,ux0_reconstructed,ux0_exact");
      double previous = -1.0;
      while (std::getline(lines, line)) {
        const double t = std::stod(line.substr(0, line.find(',')));
        CHECK(t > previous);
        previous = t;
      }
    }
  }
}

TEST_SUITE("snapshot") {
  TEST_CASE("clean plot series error stays below 1e-6 at N = 12") {
    const auto dir = scratch("plot_clean");
    REQUIRE(run({"plotdata", "--order", "12", "--noise-levels", "0", "--out", dir.string()})
                .code == 0);
    std::istringstream lines(slurp(dir / "abs_error_eps_0.csv"));
    std::string line;
    std::getline(lines, line);
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      CHECK(std::stod(line.substr(line.find(',') + 1)) <= 1e-6);
    }
    CHECK(rows == 101);
  }
}
