#include <doctest.h>

#include <cmath>
#include <vector>

#include "chpm/errors.hpp"
#include "chpm/problem.hpp"
#include "oracles.hpp"

using chpm::StefanProblem;

namespace {

// Largest |-lambda u_x(s(t), t) - L gamma s'(t)| over 101 points, central differences.
double stefan_defect(const StefanProblem& p) {
  double worst = 0.0;
  const double h = 1e-5;
  for (int i = 0; i <= 100; ++i) {
    const double t = p.horizon * i / 100.0;
    const double s = p.boundary(t);
    const double ux = (p.exact_solution(s + h, t) - p.exact_solution(s - h, t)) / (2 * h);
    worst = std::max(worst, std::fabs(-p.conductivity * ux - p.stefan_data(t)));
  }
  return worst;
}

void check_oracle_invariants(const StefanProblem& p) {
  const double s0 = p.initial_position();
  for (int i = 0; i < 50; ++i) {
    const double x = s0 * i / 49.0;
    CHECK(std::fabs(p.initial_profile(x) - p.exact_solution(x, 0.0)) <= 1e-12);
  }
  for (int i = 0; i < 50; ++i) {
    const double t = p.horizon * i / 49.0;
    CHECK(std::fabs(p.exact_solution(p.boundary(t), t) - p.melt_temperature) <= 1e-10);
  }
  // u is caloric: u_t = a^2 u_xx at interior points.
  const double h = 1e-4;
  for (double t : {0.2, 0.7}) {
    const double x = 0.5 * p.boundary(t);
    const double ut = (p.exact_solution(x, t + h) - p.exact_solution(x, t - h)) / (2 * h);
    const double uxx = (p.exact_solution(x + h, t) - 2 * p.exact_solution(x, t) +
                        p.exact_solution(x - h, t)) /
                       (h * h);
    CHECK(ut == doctest::Approx(p.diffusivity * p.diffusivity * uxx).epsilon(1e-5));
  }
  const double hx = 1e-6;
  for (double t : {0.0, 0.5}) {
    const double ux = (p.exact_solution(hx, t) - p.exact_solution(-hx, t)) / (2 * hx);
    CHECK(p.exact_flux_gradient(t) == doctest::Approx(ux).epsilon(1e-8));
  }
  CHECK(stefan_defect(p) <= 1e-8);
}

}  // namespace

TEST_SUITE("problem") {
  TEST_CASE("erf against tabulated values") {
    for (const auto& [x, ref] : oracle::kErfTable) {
      CHECK(std::fabs(std::erf(x) - ref) <= 2.0 * oracle::ulp(ref));
    }
  }

  TEST_CASE("first benchmark") {
    const StefanProblem p = chpm::example1();
    p.validate();
    CHECK(p.initial_position() == doctest::Approx(0.4142136).epsilon(1e-7));
    CHECK(p.initial_position() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
    for (double t : {0.0, 0.5, 1.0}) {
      CHECK(p.exact_solution(p.boundary(t), t) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    }
    CHECK(p.exact_flux_gradient(0.0) == doctest::Approx(-0.9477).epsilon(1e-4));
    CHECK(p.exact_flux(0.0) == doctest::Approx(0.9477).epsilon(1e-4));
    CHECK(p.stefan_data(0.3) == doctest::Approx(1.0 / std::sqrt(2.0)));
    check_oracle_invariants(p);
  }

  TEST_CASE("second benchmark") {
    const StefanProblem p = chpm::example2();
    p.validate();
    CHECK(p.initial_position() == doctest::Approx(0.50001).epsilon(2e-5));
    for (double t : {0.0, 0.5, 1.0}) {
      CHECK(p.exact_solution(p.boundary(t), t) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    }
    CHECK(p.exact_flux_gradient(0.0) == doctest::Approx(-2.259).epsilon(1e-3));
    check_oracle_invariants(p);
  }

  TEST_CASE("Neumann consistency relation") {
    CHECK(chpm::neumann_consistency(chpm::kExample2AlphaTabulated, chpm::kExample2T0) ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(chpm::neumann_consistency(0.0, chpm::kExample2T0) == 0.0);
    CHECK(chpm::neumann_consistency(1.0, chpm::kExample2T0) > 1.0);
    CHECK(chpm::neumann_consistency(1.0, chpm::kExample2T0) == doctest::Approx(4.06).epsilon(1e-2));
    const double root = chpm::neumann_root();
    CHECK(std::fabs(chpm::neumann_consistency(root, 0.0) - 1.0) <= 1e-14);
    CHECK(root == doctest::Approx(chpm::kExample2AlphaTabulated).epsilon(1e-6));
  }

  TEST_CASE("custom boundary families") {
    chpm::PhysicalParameters params;
    params.diffusivity = 0.8;
    params.conductivity = 2.0;
    params.latent_heat = 1.5;
    params.density = 0.7;
    params.melt_temperature = 0.25;
    const StefanProblem lin = chpm::linear_boundary_problem(params, 0.4, 0.3, 1.0);
    CHECK(lin.boundary(1.0) == doctest::Approx(0.7));
    check_oracle_invariants(lin);
    const StefanProblem sq = chpm::sqrt_boundary_problem(params, 0.5, 0.2, 1.0);
    CHECK(sq.boundary(0.0) == doctest::Approx(2.0 * 0.5 * std::sqrt(0.2)));
    check_oracle_invariants(sq);
  }

  TEST_CASE("preset lookup and horizons") {
    CHECK(chpm::parse_benchmark("example2") == chpm::BenchmarkId::Example2);
    CHECK(std::string(chpm::to_string(chpm::BenchmarkId::Example1)) == "example1");
    CHECK_THROWS_AS(chpm::parse_benchmark("example3"), chpm::DomainError);
    const StefanProblem p = chpm::make_benchmark(chpm::BenchmarkId::Example1, 5.0);
    CHECK(p.horizon == 5.0);
    CHECK(p.with_horizon(2.0).horizon == 2.0);
    CHECK_THROWS_AS(chpm::example1(0.0), chpm::DomainError);
    CHECK_THROWS_AS(chpm::example2(-1.0), chpm::DomainError);
  }

  TEST_CASE("validation") {
    StefanProblem p = chpm::example1();
    p.conductivity = 0.0;
    CHECK_THROWS_AS(p.validate(), chpm::DomainError);
    chpm::PhysicalParameters params;
    // s(t) = 0.2 - 0.5 t crosses zero before T = 1.
    CHECK_THROWS_AS(chpm::linear_boundary_problem(params, 0.2, -0.5, 1.0), chpm::DomainError);
    CHECK_THROWS_AS(chpm::sqrt_boundary_problem(params, -0.5, 0.2, 1.0), chpm::DomainError);
  }
}
