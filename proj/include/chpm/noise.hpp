#pragma once

#include <cstdint>
#include <string>

#include "chpm/problem.hpp"

namespace chpm {

enum class NoiseMode {
  RelativeToGradient,  // sigma(t) = level * |L gamma s'(t) / lambda|
  ConstantSigma,       // sigma(t) = level
};

const char* to_string(NoiseMode mode);
NoiseMode parse_noise_mode(const std::string& name);

struct NoiseSpec {
  double level = 0.0;
  std::uint64_t seed = 0;
  NoiseMode mode = NoiseMode::RelativeToGradient;

  void validate() const;
};

// Standard normal draw that is a pure function of (seed, t); t is quantized
// to 1e-12 before hashing.
double hashed_gaussian(std::uint64_t seed, double t);

// Standard deviation of the additive perturbation at time t.
double noise_sigma(const StefanProblem& problem, const NoiseSpec& spec, double t);

// Noisy Stefan data t -> L gamma s'(t) + sigma(t) * Z(seed, t).
TimeFunction perturb_stefan_data(const StefanProblem& problem, const NoiseSpec& spec);

// Empty function (clean closed-form assembly) when spec.level == 0.
TimeFunction stefan_data_for(const StefanProblem& problem, const NoiseSpec& spec);

}  // namespace chpm
