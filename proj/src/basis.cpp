#include "chpm/basis.hpp"

#include <cmath>
#include <string>

#include "chpm/errors.hpp"

namespace chpm {

const char* to_string(BasisScaling scaling) {
  return scaling == BasisScaling::Classical ? "classical" : "normalized";
}

BasisScaling parse_basis_scaling(const std::string& name) {
  if (name == "classical" || name == "raw") return BasisScaling::Classical;
  if (name == "normalized") return BasisScaling::Normalized;
  throw DomainError("unknown basis scaling '" + name + "'");
}

HeatPolynomialBasis::HeatPolynomialBasis(double diffusivity, int max_order,
                                         BasisScaling scaling)
    : diffusivity_(diffusivity), max_order_(max_order), scaling_(scaling) {
  if (!(diffusivity > 0.0) || !std::isfinite(diffusivity)) {
    throw DomainError("diffusivity must be positive and finite");
  }
  if (max_order < 0) throw DomainError("max_order must be non-negative");

  const double a2 = diffusivity * diffusivity;
  terms_.resize(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    auto& row = terms_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n / 2) + 1);
    // m = 0 term is n!/n! = 1 in the classical scaling and 1/n! when normalized.
    double term = 1.0;
    if (scaling == BasisScaling::Normalized) {
      for (int k = 2; k <= n; ++k) term /= k;
    }
    row[0] = term;
    for (int m = 0; m + 1 <= n / 2; ++m) {
      term *= a2 * static_cast<double>(n - 2 * m) * static_cast<double>(n - 2 * m - 1) /
              static_cast<double>(m + 1);
      row[static_cast<std::size_t>(m) + 1] = term;
    }
  }
}

void HeatPolynomialBasis::check_order(int n) const {
  if (n < 0 || n > max_order_) {
    throw DomainError("heat polynomial order " + std::to_string(n) + " outside [0, " +
                      std::to_string(max_order_) + "]");
  }
}

double HeatPolynomialBasis::ladder(int n) const {
  return scaling_ == BasisScaling::Classical ? static_cast<double>(n) : 1.0;
}

double HeatPolynomialBasis::classical_factor(int n) const {
  check_order(n);
  if (scaling_ == BasisScaling::Classical) return 1.0;
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::span<const double> HeatPolynomialBasis::term_coefficients(int n) const {
  check_order(n);
  return terms_[static_cast<std::size_t>(n)];
}

double HeatPolynomialBasis::eval_unchecked(int n, double x, double t) const {
  const auto& row = terms_[static_cast<std::size_t>(n)];
  // Homogeneous Horner in (x^2, t): ((c_0 x^2 + c_1 t) x^2 + c_2 t^2) ... times x^{n mod 2}.
  const int top = n / 2;
  const double x2 = x * x;
  double acc = row[0];
  double tp = 1.0;
  for (int m = 1; m <= top; ++m) {
    tp *= t;
    acc = acc * x2 + row[static_cast<std::size_t>(m)] * tp;
  }
  return (n % 2 == 1) ? acc * x : acc;
}

double HeatPolynomialBasis::eval(int n, double x, double t) const {
  check_order(n);
  return eval_unchecked(n, x, t);
}

double HeatPolynomialBasis::eval_dx(int n, double x, double t) const {
  check_order(n);
  if (n == 0) return 0.0;
  return ladder(n) * eval_unchecked(n - 1, x, t);
}

double HeatPolynomialBasis::eval_dxx(int n, double x, double t) const {
  check_order(n);
  if (n < 2) return 0.0;
  return ladder(n) * ladder(n - 1) * eval_unchecked(n - 2, x, t);
}

double HeatPolynomialBasis::eval_dt(int n, double x, double t) const {
  return diffusivity_ * diffusivity_ * eval_dxx(n, x, t);
}

void HeatPolynomialBasis::eval_all(double x, double t, std::span<double> out,
                                   Derivative which) const {
  if (out.size() != static_cast<std::size_t>(size())) {
    throw DomainError("eval_all output span has wrong length");
  }
  const int shift = which == Derivative::Value ? 0 : (which == Derivative::Dx ? 1 : 2);
  const double a2 = diffusivity_ * diffusivity_;
  for (int n = 0; n <= max_order_; ++n) {
    if (n < shift) {
      out[static_cast<std::size_t>(n)] = 0.0;
      continue;
    }
    double v = eval_unchecked(n - shift, x, t);
    if (shift >= 1) v *= ladder(n);
    if (shift == 2) v *= ladder(n - 1);
    if (which == Derivative::Dt) v *= a2;
    out[static_cast<std::size_t>(n)] = v;
  }
}

double HeatPolynomialBasis::eval_combination(std::span<const double> coeffs, double x, double t,
                                             Derivative which) const {
  if (coeffs.size() != static_cast<std::size_t>(size())) {
    throw DomainError("coefficient vector length " + std::to_string(coeffs.size()) +
                      " does not match basis size " + std::to_string(size()));
  }
  double sum = 0.0;
  const double a2 = diffusivity_ * diffusivity_;
  for (int n = 0; n <= max_order_; ++n) {
    const double c = coeffs[static_cast<std::size_t>(n)];
    if (c == 0.0) continue;
    switch (which) {
      case Derivative::Value:
        sum += c * eval_unchecked(n, x, t);
        break;
      case Derivative::Dx:
        if (n >= 1) sum += c * ladder(n) * eval_unchecked(n - 1, x, t);
        break;
      case Derivative::Dxx:
        if (n >= 2) sum += c * ladder(n) * ladder(n - 1) * eval_unchecked(n - 2, x, t);
        break;
      case Derivative::Dt:
        if (n >= 2) sum += c * a2 * ladder(n) * ladder(n - 1) * eval_unchecked(n - 2, x, t);
        break;
    }
  }
  return sum;
}

double HeatPolynomialBasis::initial_integral(int n, double x0, double x1) const {
  check_order(n);
  // v_n(x, 0) = x^n times the leading term coefficient.
  double p0 = x0;
  double p1 = x1;
  for (int k = 0; k < n; ++k) {
    p0 *= x0;
    p1 *= x1;
  }
  return terms_[static_cast<std::size_t>(n)][0] * (p1 - p0) / static_cast<double>(n + 1);
}

std::vector<double> to_classical(std::span<const double> coeffs,
                                 const HeatPolynomialBasis& basis) {
  if (coeffs.size() != static_cast<std::size_t>(basis.size())) {
    throw DomainError("coefficient vector length does not match basis size");
  }
  std::vector<double> out(coeffs.begin(), coeffs.end());
  for (int n = 0; n < basis.size(); ++n) {
    out[static_cast<std::size_t>(n)] /= basis.classical_factor(n);
  }
  return out;
}

}  // namespace chpm
