#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chpm {

// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
// A^T A + shift * I.
Matrix gram(const Matrix& a, double shift = 0.0);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
std::vector<double> multiply_transposed(const Matrix& a, std::span<const double> x);

double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);
double norm_inf(const Matrix& a);  // max absolute row sum
double norm_frobenius(const Matrix& a);
bool all_finite(const Matrix& a);

// PA = LU with partial pivoting. Throws SingularMatrixError when a pivot falls
// below pivot_tolerance * ||A||_inf.
class LuFactorization {
 public:
  explicit LuFactorization(Matrix a, double pivot_tolerance = 1e-14);
  std::vector<double> solve(std::span<const double> b) const;
  std::size_t size() const noexcept { return lu_.rows(); }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

// A = L L^T for symmetric positive-definite A. Throws NumericalError on a
// non-positive pivot.
class CholeskyFactorization {
 public:
  explicit CholeskyFactorization(const Matrix& a);
  std::vector<double> solve(std::span<const double> b) const;

 private:
  Matrix l_;
};

// Singular values in descending order, one-sided Jacobi rotations on columns.
std::vector<double> singular_values(const Matrix& a, double tolerance = 1e-12);

}  // namespace chpm
