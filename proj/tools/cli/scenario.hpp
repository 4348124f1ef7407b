#pragma once

#include <optional>
#include <string>
#include <vector>

#include <variform/finsler.hpp>
#include <variform/forms.hpp>
#include <variform/functional.hpp>
#include <variform/map.hpp>
#include <variform/quadrature.hpp>

#include "json_reader.hpp"

namespace variform::cli {

inline constexpr const char* kSchemaVersion = "1";

enum class Command { length, area, check, variation };

std::string_view to_string(Command c);
std::optional<Command> command_from_string(std::string_view s);

struct Geometry {
  std::optional<DifferentiableMap> map;
  std::optional<Box> box;  // "interval" is a one-dimensional box
  int orientation = 1;

  bool is_curve() const { return map && box && box->dim() == 1; }
  Piece piece() const { return Piece(*box, *map, orientation); }
};

struct Expected {
  std::optional<double> value;
  double tolerance = 1e-8;
};

enum class CheckKind {
  homogeneity,
  projectability,
  euler_identity,
  fiber_gradient,
  pullback_identity,
  reparam_invariance,
  stokes,
  domain_transform,
  leibniz,
  partition_independence,
};

std::string_view to_string(CheckKind k);

struct CheckSpec {
  CheckKind kind;
  std::string name;  // row name in the report
  double tolerance = 0.0;
  int samples = 100;
  std::vector<double> lambdas{0.5, 2.0, 10.0};
  std::optional<KForm> form;
  std::optional<DifferentiableMap> map;  // alpha or rho
  FamilyProfile profile = FamilyProfile::sine;
  double t0 = 0.5;
  double dt_step = 1e-4;
  std::vector<std::vector<Box>> covers;
};

struct VariationSpec {
  std::vector<VariationField> fields;
  double epsilon = 1e-4;
  bool expect_extremal = true;
  double tolerance = 1e-6;  // upper bound if extremal, lower bound otherwise
};

struct Scenario {
  std::string name;
  std::optional<Command> command;
  std::optional<FinslerFunction> metric;
  Geometry geometry;
  QuadratureSpec quadrature;
  Expected expected;
  std::vector<CheckSpec> checks;
  std::optional<VariationSpec> variation;
  std::optional<std::string> csv_path;
  std::optional<std::string> report_path;
  std::optional<std::string> plot_path;
};

/// Parses and fully validates a scenario for `command`. Every problem is
/// reported as a SchemaError before anything is computed.
Scenario parse_scenario(const std::string& text, Command command);
Scenario load_scenario(const std::string& path, Command command);

// Exposed for tests.
DifferentiableMap parse_map(Value v);
FinslerFunction parse_metric(Value v);
KForm parse_form(Value v);
Polynomial parse_polynomial(Value v, int num_vars);

}  // namespace variform::cli
