#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chpm/basis.hpp"
#include "chpm/dense.hpp"
#include "chpm/problem.hpp"

namespace chpm {

// Equal-width partitions of the three condition families.
struct CollocationScheme {
  int n_dirichlet = 1;  // time subintervals for u(s(t), t) = u*
  int n_stefan = 1;     // time subintervals for the Stefan condition
  int n_initial = 1;    // space subintervals of [0, s(0)] for u(x, 0) = f(x)
  int quadrature_order = 16;

  int rows() const noexcept { return n_dirichlet + n_stefan + n_initial; }

  // Throws DomainError unless the scheme yields a square system for order N.
  void validate(int max_order) const;

  bool operator==(const CollocationScheme&) const = default;
};

// "nD,nS,nI" with an optional ",Q" quadrature order.
CollocationScheme parse_scheme(const std::string& text);
std::string format_scheme(const CollocationScheme& scheme);

// Dirichlet count at least the Stefan count, one or two initial intervals.
CollocationScheme default_scheme(int max_order);

// Partitions tuned per benchmark and order where
// known; falls back to default_scheme otherwise.
CollocationScheme preset_scheme(BenchmarkId benchmark, int max_order);

struct RowLabel {
  enum class Kind { Dirichlet, Stefan, Initial };
  Kind kind;
  int index;  // 1-based within its family

  std::string str() const;
  bool operator==(const RowLabel&) const = default;
};

struct LinearSystem {
  Matrix matrix;
  std::vector<double> rhs;
  std::vector<RowLabel> row_labels;

  std::size_t size() const noexcept { return rhs.size(); }
};

// Assembles A c = b from the integrated Dirichlet, Stefan and initial residuals.
// `stefan_data` replaces the clean L*gamma*s'(t) right-hand side (noisy data);
// when empty the clean rows use the closed form L*gamma*(s(t_i) - s(t_{i-1})).
LinearSystem assemble(const StefanProblem& problem, const HeatPolynomialBasis& basis,
                      const CollocationScheme& scheme, const TimeFunction& stefan_data = {});

// A c - b.
std::vector<double> residual(const LinearSystem& system, std::span<const double> coeffs);

}  // namespace chpm
