#include "app.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <variform/error.hpp>

#include "runner.hpp"
#include "scenario.hpp"

namespace variform::cli {

namespace {

struct Flags {
  std::string scenario;
  std::uint64_t seed = 42;
  int gauss_order = 0;
  int cells = 0;
  std::string csv;
  std::string plot;
  bool quiet = false;
  bool timings = false;
  std::vector<std::string> only;  // check names (check subcommand)
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--scenario", f.scenario, "Scenario JSON file")->required();
  sub->add_option("--seed", f.seed, "Seed for sampled checks")->capture_default_str();
  sub->add_option("--gauss-order", f.gauss_order, "Gauss points per axis per cell (overrides scenario)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cells", f.cells, "Cells per axis (overrides scenario)")->check(CLI::PositiveNumber);
  sub->add_option("--csv", f.csv, "Write result rows as CSV");
  sub->add_flag("--quiet", f.quiet, "No report on stdout");
  sub->add_flag("--timings", f.timings, "Record wall time per row");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw SchemaError("", "cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter-invariant variational functionals: lengths, areas, identity checks"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* length = app.add_subcommand("length", "Finsler length of a curve");
  CLI::App* area = app.add_subcommand("area", "Areal value of a k-piece");
  CLI::App* check = app.add_subcommand("check", "Run the scenario's verification checks");
  CLI::App* variation = app.add_subcommand("variation", "First variations and extremality");
  for (CLI::App* sub : {length, area, check, variation}) add_common(sub, flags);
  for (CLI::App* sub : {length, area, variation}) {
    sub->add_option("--plot", flags.plot, "Write sampled integrand values as CSV");
  }
  check->add_option("names", flags.only, "Only run these checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  Command command = Command::length;
  if (area->parsed()) command = Command::area;
  if (check->parsed()) command = Command::check;
  if (variation->parsed()) command = Command::variation;

  Scenario scenario;
  try {
    scenario = load_scenario(flags.scenario, command);
    if (flags.gauss_order > 0) scenario.quadrature.gauss_order = flags.gauss_order;
    if (flags.cells > 0) scenario.quadrature.cells_per_axis = flags.cells;
    if (!flags.only.empty()) {
      const std::set<std::string> wanted(flags.only.begin(), flags.only.end());
      std::set<std::string> seen;
      std::vector<CheckSpec> kept;
      for (auto& c : scenario.checks) {
        if (wanted.count(c.name)) {
          seen.insert(c.name);
          kept.push_back(std::move(c));
        }
      }
      for (const auto& w : wanted) {
        if (!seen.count(w)) throw SchemaError("/checks", "scenario has no check named '" + w + "'");
      }
      scenario.checks = std::move(kept);
    }
    if (command == Command::check && scenario.plot_path) {
      throw SchemaError("/output/plot", "plots are only available for length, area and variation");
    }
  } catch (const SchemaError& e) {
    std::cerr << "variform: " << flags.scenario << ": " << e.what() << '\n';
    return exit_input_error;
  }

  const RunOptions options{flags.seed, flags.timings};
  RunResult result;
  std::string plot;
  try {
    result = run(command, scenario, options);
    const std::string plot_path = !flags.plot.empty() ? flags.plot : scenario.plot_path.value_or("");
    if (!plot_path.empty()) plot = format_plot(command, scenario);
  } catch (const std::exception& e) {
    std::cerr << "variform: numeric error: " << e.what() << '\n';
    return exit_numeric_error;
  }

  const std::string report = format_report(command, scenario, flags.scenario, options, result);
  try {
    const std::string csv_path = !flags.csv.empty() ? flags.csv : scenario.csv_path.value_or("");
    if (!csv_path.empty()) write_file(csv_path, format_csv(result, flags.timings));
    if (scenario.report_path) write_file(*scenario.report_path, report);
    const std::string plot_path = !flags.plot.empty() ? flags.plot : scenario.plot_path.value_or("");
    if (!plot_path.empty()) write_file(plot_path, plot);
  } catch (const SchemaError& e) {
    std::cerr << "variform: " << e.what() << '\n';
    return exit_input_error;
  }
  if (!flags.quiet) std::cout << report;
  return result.failures() ? exit_check_failed : exit_pass;
}

}  // namespace variform::cli
