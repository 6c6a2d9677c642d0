#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chpm/experiments.hpp"
#include "chpm/metrics.hpp"

namespace chpm::io {

inline constexpr int kReportSchemaVersion = 1;

// 17 significant digits, locale-independent. NaN -> "nan", infinities -> "inf"/"-inf".
std::string format_number(double value);

// Shortest round-trip form, used for file-name suffixes such as flux_eps_0.01.csv.
std::string format_short(double value);

std::string report_json(const SolveReport& report);

std::string flux_curve_csv(const std::vector<FluxSample>& curve);
std::string flux_series_csv(const std::vector<FluxSample>& curve);
std::string abs_error_csv(const std::vector<FluxSample>& curve);
std::string sweep_csv(const SweepResult& result);
// beta rows x N columns of median delta_p, one block of rows per (eps, T).
std::string table1_csv(const SweepResult& result);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace chpm::io
