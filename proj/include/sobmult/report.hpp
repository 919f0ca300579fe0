#pragma once

#include "sobmult/rational.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sobmult {

struct ReportRow {
  double parameter = 0.0;
  std::vector<std::pair<std::string, double>> values;
};

/**
 * Table of (parameter, measured quantities) rows with a fitted log-log
 * slope. Two pass criteria are in use: exact-identity experiments compare
 * |slope - expected| against the tolerance, boundedness experiments only
 * require slope - expected <= tolerance (one_sided).
 */
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<ReportRow> rows;
  double fitted_slope = 0.0;
  double slope_stderr = 0.0;
  Rational expected_slope;
  double tolerance = 0.0;
  bool one_sided = false;
  bool pass = false;
  std::vector<std::string> provenance;
};

/// Ordinary least squares fit y = a + slope * x; returns {slope, stderr}.
/// Requires at least three points.
std::pair<double, double> linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

nlohmann::json report_to_json(const ExperimentReport& report);
void write_report_json(const ExperimentReport& report, const std::filesystem::path& path);
/// One CSV row per measurement: parameter plus the named quantities.
void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path);

} // namespace sobmult
