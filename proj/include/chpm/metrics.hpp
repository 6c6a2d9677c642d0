#pragma once

#include <span>
#include <vector>

#include "chpm/basis.hpp"
#include "chpm/problem.hpp"

namespace chpm {

struct FluxSample {
  double t;
  double reconstructed;  // d/dx u_N(0, t)
  double exact;          // u_x(0, t), NaN without an oracle
  double abs_error;      // NaN without an oracle
};

struct ErrorReport {
  double delta_u = 0.0;
  double delta_p = 0.0;
  double max_abs_flux_error = 0.0;
  std::vector<FluxSample> flux_curve;
};

// Root-mean-square relative flux error over [0, T], P = -lambda u_x(0, t).
double delta_p(std::span<const double> coeffs, const StefanProblem& problem,
               const HeatPolynomialBasis& basis, int quad_points = 256);

// Root-mean-square relative temperature error over 0 < x < s(t), 0 < t < T.
double delta_u(std::span<const double> coeffs, const StefanProblem& problem,
               const HeatPolynomialBasis& basis, int quad_points_t = 64, int quad_points_x = 64);

std::vector<FluxSample> flux_curve(std::span<const double> coeffs, const StefanProblem& problem,
                                   const HeatPolynomialBasis& basis, int samples);

ErrorReport evaluate(std::span<const double> coeffs, const StefanProblem& problem,
                     const HeatPolynomialBasis& basis, int samples = 101);

struct DecayEntry {
  int order;
  double magnitude;  // |c_n|
  double bound;      // C (e / (2 n t_ref))^{n/2}
};

// Compares |c_n| with the decay envelope (e / (2 n t_ref))^{n/2}; C is the
// smallest constant for which the envelope dominates every |c_n|. Expects
// coefficients in the classical scaling (see to_classical).
std::vector<DecayEntry> coefficient_decay(std::span<const double> coeffs, double t_ref,
                                          double horizon);

// Envelope shape without the constant; 1 at n = 0.
double decay_shape(int order, double t_ref);

}  // namespace chpm
