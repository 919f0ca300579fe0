#include "sobmult/report.hpp"

#include "sobmult/errors.hpp"

#include <cmath>
#include <fstream>

namespace sobmult {

std::pair<double, double> linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n < 3) {
    throw ConfigError("least-squares fit needs at least 3 points, got " + std::to_string(n));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw ConfigError("least-squares fit needs distinct abscissae");
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    rss += r * r;
  }
  const double stderr_slope = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  return {slope, stderr_slope};
}

nlohmann::json report_to_json(const ExperimentReport& report) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : report.config) config[key] = value;

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json entry;
    entry["parameter"] = row.parameter;
    for (const auto& [name, value] : row.values) entry[name] = value;
    rows.push_back(std::move(entry));
  }

  return nlohmann::json{{"experiment", report.experiment},
                        {"config", std::move(config)},
                        {"rows", std::move(rows)},
                        {"slope", report.fitted_slope},
                        {"stderr", report.slope_stderr},
                        {"expected", report.expected_slope.fraction_str()},
                        {"tolerance", report.tolerance},
                        {"one_sided", report.one_sided},
                        {"pass", report.pass},
                        {"provenance", report.provenance}};
}

void write_report_json(const ExperimentReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << report_to_json(report).dump(2) << "\n";
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "parameter";
  if (!report.rows.empty()) {
    for (const auto& [name, value] : report.rows.front().values) out << "," << name;
  }
  out << "\n";
  out.precision(17);
  for (const auto& row : report.rows) {
    out << row.parameter;
    for (const auto& [name, value] : row.values) out << "," << value;
    out << "\n";
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace sobmult
