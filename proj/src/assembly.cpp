#include "chpm/assembly.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <utility>

#include "chpm/errors.hpp"
#include "chpm/quadrature.hpp"

namespace chpm {

void CollocationScheme::validate(int max_order) const {
  if (n_dirichlet < 1 || n_stefan < 1 || n_initial < 1) {
    throw DomainError("scheme partition counts must be positive");
  }
  if (rows() != max_order + 1) {
    throw DomainError("scheme " + format_scheme(*this) + " gives " + std::to_string(rows()) +
                      " rows but order " + std::to_string(max_order) + " needs " +
                      std::to_string(max_order + 1));
  }
  if (n_dirichlet < n_stefan) {
    throw DomainError("scheme " + format_scheme(*this) +
                      " has fewer Dirichlet than Stefan intervals");
  }
  if (quadrature_order < 8) throw DomainError("quadrature order must be at least 8");
}

CollocationScheme parse_scheme(const std::string& text) {
  std::vector<int> parts;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) throw DomainError("malformed scheme '" + text + "'");
    parts.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',' || p + 1 == end) throw DomainError("malformed scheme '" + text + "'");
      ++p;
    }
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw DomainError("scheme needs nD,nS,nI[,Q], got '" + text + "'");
  }
  CollocationScheme s{parts[0], parts[1], parts[2]};
  if (parts.size() == 4) s.quadrature_order = parts[3];
  return s;
}

std::string format_scheme(const CollocationScheme& s) {
  return std::to_string(s.n_dirichlet) + "," + std::to_string(s.n_stefan) + "," +
         std::to_string(s.n_initial);
}

CollocationScheme default_scheme(int max_order) {
  if (max_order < 2) throw DomainError("default scheme needs order >= 2");
  const int rows = max_order + 1;
  const int n_initial = rows <= 11 ? 1 : 2;
  const int remaining = rows - n_initial;
  int n_stefan = remaining / 2;
  if (remaining - n_stefan == n_stefan && n_stefan > 1) --n_stefan;
  return CollocationScheme{remaining - n_stefan, n_stefan, n_initial};
}

CollocationScheme preset_scheme(BenchmarkId benchmark, int max_order) {
  using Key = std::pair<BenchmarkId, int>;
  static const std::map<Key, CollocationScheme> table = {
      {{BenchmarkId::Example1, 4}, {2, 2, 1}},   {{BenchmarkId::Example1, 6}, {3, 2, 2}},
      {{BenchmarkId::Example1, 8}, {4, 3, 2}},   {{BenchmarkId::Example1, 10}, {5, 4, 2}},
      {{BenchmarkId::Example1, 12}, {6, 5, 2}},  {{BenchmarkId::Example1, 14}, {7, 6, 2}},
      {{BenchmarkId::Example1, 16}, {8, 8, 1}},  {{BenchmarkId::Example2, 6}, {4, 2, 1}},
      {{BenchmarkId::Example2, 8}, {4, 4, 1}},   {{BenchmarkId::Example2, 10}, {6, 4, 1}},
      {{BenchmarkId::Example2, 12}, {7, 5, 1}},  {{BenchmarkId::Example2, 14}, {7, 6, 2}},
  };
  if (auto it = table.find({benchmark, max_order}); it != table.end()) return it->second;
  return default_scheme(max_order);
}

std::string RowLabel::str() const {
  const char* family = kind == Kind::Dirichlet ? "dirichlet" : (kind == Kind::Stefan ? "stefan" : "initial");
  return std::string(family) + "[" + std::to_string(index) + "]";
}

namespace {

void check_row(const LinearSystem& sys, std::size_t row) {
  for (double v : sys.matrix.row(row)) {
    if (!std::isfinite(v)) {
      throw NumericalError("non-finite matrix entry in row " + sys.row_labels[row].str(),
                           "non_finite");
    }
  }
  if (!std::isfinite(sys.rhs[row])) {
    throw NumericalError("non-finite right-hand side in row " + sys.row_labels[row].str(),
                         "non_finite");
  }
}

}  // namespace

LinearSystem assemble(const StefanProblem& problem, const HeatPolynomialBasis& basis,
                      const CollocationScheme& scheme, const TimeFunction& stefan_data) {
  scheme.validate(basis.max_order());
  problem.validate();
  if (basis.diffusivity() != problem.diffusivity) {
    throw DomainError("basis diffusivity does not match the problem");
  }
  const std::size_t n = static_cast<std::size_t>(basis.size());
  const GaussLegendre rule(scheme.quadrature_order);
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  const double horizon = problem.horizon;

  LinearSystem sys{Matrix(n, n), std::vector<double>(n, 0.0), {}};
  sys.row_labels.reserve(n);
  std::vector<double> values(n);
  std::size_t row = 0;

  // Integral over [lo, hi] of d^k v_n(s(t), t) for every n, accumulated into `out`.
  auto integrate_along_boundary = [&](double lo, double hi, Derivative which,
                                      std::span<double> out) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double t = mid + half * nodes[k];
      basis.eval_all(problem.boundary(t), t, values, which);
      for (std::size_t j = 0; j < n; ++j) out[j] += half * weights[k] * values[j];
    }
  };

  for (int i = 1; i <= scheme.n_dirichlet; ++i, ++row) {
    const double lo = horizon * (i - 1) / scheme.n_dirichlet;
    const double hi = horizon * i / scheme.n_dirichlet;
    sys.row_labels.push_back({RowLabel::Kind::Dirichlet, i});
    integrate_along_boundary(lo, hi, Derivative::Value, sys.matrix.row(row));
    sys.rhs[row] = problem.melt_temperature * (hi - lo);
    check_row(sys, row);
  }

  for (int i = 1; i <= scheme.n_stefan; ++i, ++row) {
    const double lo = horizon * (i - 1) / scheme.n_stefan;
    const double hi = horizon * i / scheme.n_stefan;
    sys.row_labels.push_back({RowLabel::Kind::Stefan, i});
    auto r = sys.matrix.row(row);
    integrate_along_boundary(lo, hi, Derivative::Dx, r);
    for (double& v : r) v *= -problem.conductivity;
    if (stefan_data) {
      sys.rhs[row] = rule.integrate(stefan_data, lo, hi);
    } else {
      sys.rhs[row] = problem.stefan_coefficient() * (problem.boundary(hi) - problem.boundary(lo));
    }
    check_row(sys, row);
  }

  const double s0 = problem.initial_position();
  for (int j = 1; j <= scheme.n_initial; ++j, ++row) {
    const double lo = s0 * (j - 1) / scheme.n_initial;
    const double hi = s0 * j / scheme.n_initial;
    sys.row_labels.push_back({RowLabel::Kind::Initial, j});
    auto r = sys.matrix.row(row);
    for (std::size_t m = 0; m < n; ++m) {
      r[m] = basis.initial_integral(static_cast<int>(m), lo, hi);
    }
    sys.rhs[row] = rule.integrate(problem.initial_profile, lo, hi);
    check_row(sys, row);
  }
  return sys;
}

std::vector<double> residual(const LinearSystem& system, std::span<const double> coeffs) {
  if (coeffs.size() != system.matrix.cols()) {
    throw DomainError("coefficient vector length does not match the system");
  }
  auto r = multiply(system.matrix, coeffs);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= system.rhs[i];
  return r;
}

}  // namespace chpm
