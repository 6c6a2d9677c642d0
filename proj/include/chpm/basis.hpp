#pragma once

#include <span>
#include <string>
#include <vector>

namespace chpm {

// Column normalization of the heat-polynomial family.
//   Classical:  v_n(x,t) = sum_m a^{2m} n! / (m! (n-2m)!) x^{n-2m} t^m
//   Normalized: v_n(x,t) / n!, the Taylor coefficients of exp(xz + a^2 t z^2)
// Both span the same space; they differ only in how a Tikhonov penalty and a
// condition number see the coefficient vector.
enum class BasisScaling { Classical, Normalized };

enum class Derivative { Value, Dx, Dxx, Dt };

const char* to_string(BasisScaling scaling);
BasisScaling parse_basis_scaling(const std::string& name);

class HeatPolynomialBasis {
 public:
  HeatPolynomialBasis(double diffusivity, int max_order,
                      BasisScaling scaling = BasisScaling::Classical);

  double diffusivity() const noexcept { return diffusivity_; }
  int max_order() const noexcept { return max_order_; }
  int size() const noexcept { return max_order_ + 1; }
  BasisScaling scaling() const noexcept { return scaling_; }

  double eval(int n, double x, double t) const;
  // d/dx v_n = n v_{n-1} (classical) or v_{n-1} (normalized).
  double eval_dx(int n, double x, double t) const;
  double eval_dxx(int n, double x, double t) const;
  // d/dt v_n = a^2 d^2/dx^2 v_n.
  double eval_dt(int n, double x, double t) const;

  double eval_combination(std::span<const double> coeffs, double x, double t,
                          Derivative which = Derivative::Value) const;

  // Fills out[n] = d^k v_n(x,t) (k selected by `which`) for n = 0..max_order.
  void eval_all(double x, double t, std::span<double> out,
                Derivative which = Derivative::Value) const;

  // Closed form of the integral of v_n(x, 0) over [x0, x1].
  double initial_integral(int n, double x0, double x1) const;

  // Coefficients of x^{n-2m} t^m for m = 0..floor(n/2).
  std::span<const double> term_coefficients(int n) const;

  // Factor k_n with v_n(classical) = k_n * v_n(this scaling); 1 or n!.
  double classical_factor(int n) const;

 private:
  void check_order(int n) const;
  // Multiplier relating d/dx v_n to v_{n-1} in this scaling.
  double ladder(int n) const;
  double eval_unchecked(int n, double x, double t) const;

  double diffusivity_;
  int max_order_;
  BasisScaling scaling_;
  std::vector<std::vector<double>> terms_;
};

// Converts coefficients expressed in `basis` to the classical scaling.
std::vector<double> to_classical(std::span<const double> coeffs,
                                 const HeatPolynomialBasis& basis);

}  // namespace chpm
