#pragma once

#include <string>
#include <vector>

#include "chpm/assembly.hpp"

namespace chpm {

enum class SolveMethod { Direct, Tikhonov };

struct SolveConfig {
  double beta = 0.0;
  SolveMethod method = SolveMethod::Direct;

  // Direct when beta == 0, Tikhonov otherwise.
  static SolveConfig for_beta(double beta);
  void validate() const;
};

struct Solution {
  std::vector<double> coeffs;
  double relative_residual = 0.0;  // ||A c - b|| / ||b||
};

// Partial-pivoting LU on A.
Solution solve_direct(const LinearSystem& system);

// (A^T A + beta I) c = A^T b by Cholesky; beta == 0 falls back to pivoted LU
// on the normal matrix.
Solution solve_tikhonov(const LinearSystem& system, double beta);

Solution solve(const LinearSystem& system, const SolveConfig& config);

// 2-norm condition number of the matrix actually inverted: A when beta == 0,
// A^T A + beta I otherwise.
double condition_number(const LinearSystem& system, double beta);
double condition_number(const Matrix& matrix);

}  // namespace chpm
