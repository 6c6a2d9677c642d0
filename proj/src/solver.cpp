#include "chpm/solver.hpp"

#include <cmath>
#include <limits>

#include "chpm/errors.hpp"

namespace chpm {

SolveConfig SolveConfig::for_beta(double beta) {
  return SolveConfig{beta, beta == 0.0 ? SolveMethod::Direct : SolveMethod::Tikhonov};
}

void SolveConfig::validate() const {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("regularization parameter must be finite and non-negative");
  }
  if (method == SolveMethod::Direct && beta != 0.0) {
    throw DomainError("direct solve requires beta = 0");
  }
}

namespace {

void require_square(const LinearSystem& system) {
  if (!system.matrix.square() || system.matrix.rows() != system.rhs.size()) {
    throw DomainError("collocation system must be square with matching right-hand side");
  }
}

double relative_residual(const LinearSystem& system, const std::vector<double>& c) {
  const double bnorm = norm2(system.rhs);
  const double rnorm = norm2(residual(system, c));
  return bnorm > 0.0 ? rnorm / bnorm : rnorm;
}

}  // namespace

Solution solve_direct(const LinearSystem& system) {
  require_square(system);
  LuFactorization lu(system.matrix);
  Solution s;
  s.coeffs = lu.solve(system.rhs);
  s.relative_residual = relative_residual(system, s.coeffs);
  return s;
}

Solution solve_tikhonov(const LinearSystem& system, double beta) {
  require_square(system);
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("regularization parameter must be finite and non-negative");
  }
  const Matrix normal = gram(system.matrix, beta);
  const auto rhs = multiply_transposed(system.matrix, system.rhs);
  Solution s;
  if (beta == 0.0) {
    s.coeffs = LuFactorization(normal).solve(rhs);
  } else {
    s.coeffs = CholeskyFactorization(normal).solve(rhs);
  }
  s.relative_residual = relative_residual(system, s.coeffs);
  return s;
}

Solution solve(const LinearSystem& system, const SolveConfig& config) {
  config.validate();
  return config.method == SolveMethod::Direct ? solve_direct(system)
                                              : solve_tikhonov(system, config.beta);
}

double condition_number(const Matrix& matrix) {
  const auto sv = singular_values(matrix);
  if (sv.empty()) throw DomainError("condition number of an empty matrix");
  if (sv.back() == 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / sv.back();
}

double condition_number(const LinearSystem& system, double beta) {
  require_square(system);
  if (!(beta >= 0.0)) throw DomainError("regularization parameter must be non-negative");
  if (!all_finite(system.matrix)) {
    throw NumericalError("matrix has non-finite entries", "non_finite");
  }
  if (beta == 0.0) return condition_number(system.matrix);
  // A^T A + beta I is symmetric positive definite: its singular values are
  // sigma_i(A)^2 + beta, which avoids forming the squared matrix.
  const auto sv = singular_values(system.matrix);
  return (sv.front() * sv.front() + beta) / (sv.back() * sv.back() + beta);
}

}  // namespace chpm
