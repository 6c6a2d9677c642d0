#include "chpm/noise.hpp"

#include <cmath>
#include <numbers>

#include "chpm/errors.hpp"

namespace chpm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform on (0, 1] from the top 53 bits.
double to_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

const char* to_string(NoiseMode mode) {
  return mode == NoiseMode::RelativeToGradient ? "relative" : "constant";
}

NoiseMode parse_noise_mode(const std::string& name) {
  if (name == "relative") return NoiseMode::RelativeToGradient;
  if (name == "constant") return NoiseMode::ConstantSigma;
  throw DomainError("unknown noise mode '" + name + "'");
}

void NoiseSpec::validate() const {
  if (!(level >= 0.0) || !std::isfinite(level)) {
    throw DomainError("noise level must be finite and non-negative");
  }
}

double hashed_gaussian(std::uint64_t seed, double t) {
  const auto q = static_cast<std::int64_t>(std::llround(t * 1e12));
  const std::uint64_t key = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(q)));
  const double u1 = to_unit(key);
  const double u2 = to_unit(splitmix64(key));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double noise_sigma(const StefanProblem& problem, const NoiseSpec& spec, double t) {
  if (spec.mode == NoiseMode::ConstantSigma) return spec.level;
  return spec.level * std::abs(problem.stefan_data(t) / problem.conductivity);
}

TimeFunction perturb_stefan_data(const StefanProblem& problem, const NoiseSpec& spec) {
  spec.validate();
  if (spec.level == 0.0) {
    return [problem](double t) { return problem.stefan_data(t); };
  }
  return [problem, spec](double t) {
    return problem.stefan_data(t) + noise_sigma(problem, spec, t) * hashed_gaussian(spec.seed, t);
  };
}

TimeFunction stefan_data_for(const StefanProblem& problem, const NoiseSpec& spec) {
  spec.validate();
  if (spec.level == 0.0) return {};
  return perturb_stefan_data(problem, spec);
}

}  // namespace chpm
