#include "chpm/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "chpm/errors.hpp"

namespace chpm::io {

namespace {

std::string to_chars_string(double value, bool fixed_precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = fixed_precision
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, 17)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string format_number(double value) { return to_chars_string(value, true); }

std::string format_short(double value) { return to_chars_string(value, false); }

std::string report_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["problem"] = r.spec.problem.name();
  j["order"] = r.spec.order;
  j["beta"] = r.spec.beta;
  j["basis"] = to_string(r.spec.scaling);
  j["scheme"] = {{"n_dirichlet", r.scheme.n_dirichlet},
                 {"n_stefan", r.scheme.n_stefan},
                 {"n_initial", r.scheme.n_initial},
                 {"quadrature_order", r.scheme.quadrature_order}};
  j["noise"] = {{"level", r.spec.noise.level},
                {"seed", r.spec.noise.seed},
                {"mode", to_string(r.spec.noise.mode)}};
  j["horizon"] = r.spec.horizon;
  j["fit_horizon"] = r.spec.fit_horizon ? nlohmann::ordered_json(*r.spec.fit_horizon)
                                        : nlohmann::ordered_json(r.spec.horizon);
  j["delta_p"] = number_or_null(r.delta_p);
  j["delta_u"] = number_or_null(r.delta_u);
  j["condition_number"] = number_or_null(r.condition_number);
  j["relative_residual"] = number_or_null(r.relative_residual);
  j["max_abs_flux_error"] = number_or_null(r.max_abs_flux_error);
  auto coeffs = nlohmann::ordered_json::array();
  for (double c : r.coeffs) coeffs.push_back(c);
  j["coefficients"] = coeffs;
  return j.dump(2) + "\n";
}

std::string flux_curve_csv(const std::vector<FluxSample>& curve) {
  std::string out = "t,ux0_reconstructed,ux0_exact,abs_error\n";
  for (const auto& s : curve) {
    out += format_number(s.t) + "," + format_number(s.reconstructed) + "," +
           format_number(s.exact) + "," + format_number(s.abs_error) + "\n";
  }
  return out;
}

std::string flux_series_csv(const std::vector<FluxSample>& curve) {
  std::string out = "t,ux0_reconstructed,ux0_exact\n";
  for (const auto& s : curve) {
    out += format_number(s.t) + "," + format_number(s.reconstructed) + "," +
           format_number(s.exact) + "\n";
  }
  return out;
}

std::string abs_error_csv(const std::vector<FluxSample>& curve) {
  std::string out = "t,abs_error\n";
  for (const auto& s : curve) out += format_number(s.t) + "," + format_number(s.abs_error) + "\n";
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out =
      "benchmark,N,beta,eps,seed_count,T,delta_p_median,delta_p_iqr,delta_u_median,cond,"
      "failures\n";
  for (const auto& s : result.summaries) {
    out += result.problem_name + "," + std::to_string(s.order) + "," + format_number(s.beta) +
           "," + format_number(s.eps) + "," + std::to_string(s.seed_count) + "," +
           format_number(s.horizon) + "," + format_number(s.delta_p_median) + "," +
           format_number(s.delta_p_iqr) + "," + format_number(s.delta_u_median) + "," +
           format_number(s.condition_number) + "," + std::to_string(s.failures) + "\n";
  }
  return out;
}

std::string table1_csv(const SweepResult& result) {
  std::vector<int> orders;
  for (const auto& s : result.summaries) {
    if (std::find(orders.begin(), orders.end(), s.order) == orders.end()) orders.push_back(s.order);
  }
  std::string out = "eps,T,beta";
  for (int n : orders) out += "," + std::to_string(n);
  out += "\n";

  // Rows keep first-appearance order of (eps, T, beta).
  std::vector<std::tuple<double, double, double>> rows;
  for (const auto& s : result.summaries) {
    const auto key = std::make_tuple(s.eps, s.horizon, s.beta);
    if (std::find(rows.begin(), rows.end(), key) == rows.end()) rows.push_back(key);
  }
  for (const auto& [eps, horizon, beta] : rows) {
    out += format_number(eps) + "," + format_number(horizon) + "," + format_number(beta);
    for (int n : orders) {
      const CellSummary* s = result.find(n, beta, eps, horizon);
      out += ",";
      if (s) out += format_number(s->delta_p_median);
    }
    out += "\n";
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DomainError("cannot open '" + path.string() + "' for writing");
  f << contents;
  if (!f) throw DomainError("failed writing '" + path.string() + "'");
}

}  // namespace chpm::io
