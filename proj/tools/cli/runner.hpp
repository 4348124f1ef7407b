#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace variform::cli {

enum class Status { pass, fail, info };

/// One computed quantity. A row passes iff residual <= tolerance; for
/// lower-bound rows (at_least) the residual is the shortfall max(0, expected - value).
struct Row {
  std::string name;
  double value = 0.0;
  std::optional<double> expected;
  std::optional<double> tolerance;
  std::optional<double> residual;
  Status status = Status::info;
  bool lower_bound = false;
  double seconds = 0.0;

  static Row measured(std::string name, double value, double expected, double tolerance);
  static Row bounded(std::string name, double residual, double tolerance);
  static Row at_least(std::string name, double value, double bound);
  static Row info(std::string name, double value);
};

struct RunOptions {
  std::uint64_t seed = 42;
  bool timings = false;
};

struct RunResult {
  std::vector<Row> rows;
  std::vector<std::string> warnings;

  std::size_t failures() const;
};

/// Throws variform::Error on numeric failures.
RunResult run(Command command, const Scenario& scenario, const RunOptions& options);

std::string format_csv(const RunResult& result, bool timings);
std::string format_report(Command command, const Scenario& scenario, const std::string& scenario_path,
                          const RunOptions& options, const RunResult& result);
/// Sampled integrand of the length/area computation: one line per grid point.
std::string format_plot(Command command, const Scenario& scenario);

/// %.17g
std::string full_precision(double x);
/// Short human form, exponents without padding: 1e-8, 6.283185307.
std::string short_number(double x, int digits = 10);

}  // namespace variform::cli
