#include "scenario.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <variform/error.hpp>
#include <variform/maps.hpp>

namespace variform::cli {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::length: return "length";
    case Command::area: return "area";
    case Command::check: return "check";
    case Command::variation: return "variation";
  }
  return "?";
}

std::optional<Command> command_from_string(std::string_view s) {
  for (Command c : {Command::length, Command::area, Command::check, Command::variation}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

namespace {

const std::map<std::string, CheckKind, std::less<>> kCheckNames = {
    {"homogeneity", CheckKind::homogeneity},
    {"projectability", CheckKind::projectability},
    {"euler_identity", CheckKind::euler_identity},
    {"fiber_gradient", CheckKind::fiber_gradient},
    {"pullback_identity", CheckKind::pullback_identity},
    {"reparam_invariance", CheckKind::reparam_invariance},
    {"stokes", CheckKind::stokes},
    {"domain_transform", CheckKind::domain_transform},
    {"leibniz", CheckKind::leibniz},
    {"partition_independence", CheckKind::partition_independence},
};

// Library validation errors raised while building objects are input errors.
template <class F>
auto build(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw SchemaError(where, e.what());
  }
}

Box parse_box(Value v) {
  Object o = v.object();
  const Vec lo = o.at("lo").vector();
  const Vec hi = o.at("hi").vector();
  o.finish();
  return build(v.path(), [&] { return Box(lo, hi); });
}

Box parse_interval(Value v) {
  const auto xs = v.numbers();
  if (xs.size() != 2) v.error("an interval is [a, b]");
  return build(v.path(), [&] { return Box::interval(xs[0], xs[1]); });
}

QuadratureSpec parse_quadrature(Value v) {
  Object o = v.object();
  QuadratureSpec q;
  if (auto x = o.find("gauss_order")) q.gauss_order = x->integer_at_least(1);
  if (auto x = o.find("cells_per_axis")) q.cells_per_axis = x->integer_at_least(1);
  if (auto x = o.find("adaptive")) q.adaptive = x->boolean();
  if (auto x = o.find("target")) q.target = x->positive();
  if (auto x = o.find("max_depth")) q.max_depth = x->integer_at_least(0);
  o.finish();
  return q;
}

FamilyProfile parse_profile(Value v) {
  const std::string s = v.string();
  if (s == "constant") return FamilyProfile::constant;
  if (s == "linear") return FamilyProfile::linear;
  if (s == "sine") return FamilyProfile::sine;
  v.error("unknown family profile '" + s + "' (constant, linear, sine)");
}

std::vector<Vec> parse_vectors(Value v) {
  std::vector<Vec> out;
  for (const auto& x : v.array()) out.push_back(x.vector());
  return out;
}

}  // namespace

Polynomial parse_polynomial(Value v, int num_vars) {
  if (v.raw().is_number()) return Polynomial::constant(num_vars, v.number());
  Object o = v.object();
  if (auto x = o.find("vars")) {
    const int n = x->integer_at_least(1);
    if (num_vars > 0 && n != num_vars) x->error("expected " + std::to_string(num_vars) + " variables");
    num_vars = n;
  }
  std::vector<Monomial> terms;
  for (const auto& t : o.at("terms").array()) {
    Object to = t.object();
    Monomial m;
    m.coef = to.at("coef").number();
    const Value e = to.at("exponents");
    for (const auto& x : e.array()) m.exponents.push_back(x.integer_at_least(0));
    to.finish();
    if (num_vars <= 0) num_vars = static_cast<int>(m.exponents.size());
    if (static_cast<int>(m.exponents.size()) != num_vars) {
      e.error("expected " + std::to_string(num_vars) + " exponents");
    }
    terms.push_back(std::move(m));
  }
  o.finish();
  if (num_vars <= 0) v.error("cannot infer the number of variables");
  return build(v.path(), [&] { return Polynomial(num_vars, std::move(terms)); });
}

DifferentiableMap parse_map(Value v) {
  Object o = v.object();
  const Value namev = o.at("name");
  const std::string name = namev.string();
  auto num = [&](const char* key) { return o.at(key).number(); };
  auto num_or = [&](const char* key, double d) {
    auto x = o.find(key);
    return x ? x->number() : d;
  };
  auto vec_or = [&](const char* key, Vec d) {
    auto x = o.find(key);
    return x ? x->vector() : d;
  };

  std::function<DifferentiableMap()> make;
  if (name == "identity") {
    const int n = o.at("dim").integer_at_least(1);
    make = [n] { return maps::identity(n); };
  } else if (name == "linear") {
    const Mat A = o.at("matrix").matrix();
    make = [A] { return maps::linear(A); };
  } else if (name == "affine") {
    const Mat A = o.at("matrix").matrix();
    const Vec b = o.at("offset").vector();
    make = [A, b] { return maps::affine(A, b); };
  } else if (name == "polynomial") {
    std::vector<Polynomial> comps;
    const int vars = o.at("vars").integer_at_least(1);
    for (const auto& c : o.at("components").array()) comps.push_back(parse_polynomial(c, vars));
    make = [comps] { return maps::polynomial(comps); };
  } else if (name == "circle") {
    const double r = num_or("radius", 1.0);
    const Vec c = vec_or("center", Vec::Zero(2));
    make = [r, c] { return maps::circle(r, c); };
  } else if (name == "helix") {
    const double r = num_or("radius", 1.0), p = num("pitch");
    make = [r, p] { return maps::helix(r, p); };
  } else if (name == "segment") {
    const Vec p = o.at("from").vector(), q = o.at("to").vector();
    make = [p, q] { return maps::segment(p, q); };
  } else if (name == "fourier_curve") {
    const Vec a0 = o.at("a0").vector();
    const auto c = o.find("cos") ? parse_vectors(*o.find("cos")) : std::vector<Vec>{};
    const auto s = o.find("sin") ? parse_vectors(*o.find("sin")) : std::vector<Vec>{};
    make = [a0, c, s] { return maps::fourier_curve(a0, c, s); };
  } else if (name == "torus_patch") {
    const double R = num("major_radius"), r = num("minor_radius");
    make = [R, r] { return maps::torus_patch(R, r); };
  } else if (name == "sphere_patch") {
    const double r = num_or("radius", 1.0);
    make = [r] { return maps::sphere_patch(r); };
  } else if (name == "graph_surface") {
    const Polynomial h = parse_polynomial(o.at("height"), 0);
    make = [h] { return maps::graph_surface(h); };
  } else if (name == "polar") {
    make = [] { return maps::polar(); };
  } else if (name == "affine_reparam") {
    const double a = num("scale"), b = num_or("shift", 0.0);
    make = [a, b] { return maps::affine_reparam(a, b); };
  } else if (name == "sine_reparam") {
    const double c = num("amplitude");
    make = [c] { return maps::sine_reparam(c); };
  } else if (name == "inclusion") {
    const int k = o.at("k").integer_at_least(1), m = o.at("m").integer_at_least(1);
    make = [k, m] { return maps::inclusion(k, m); };
  } else {
    namev.error("unknown map '" + name + "'");
  }
  o.finish();
  return build(v.path(), make);
}

FinslerFunction parse_metric(Value v) {
  Object o = v.object();
  const Value kindv = o.at("kind");
  const auto kind = metric_kind_from_string(kindv.string());
  if (!kind) kindv.error("unknown metric kind '" + kindv.string() + "'");

  auto metric_field = [&](int fallback_dim) {
    Mat g;
    if (auto x = o.find("g")) {
      g = x->matrix();
    } else {
      if (fallback_dim < 1) o.at("g");  // reports the missing field
      g = Mat::Identity(fallback_dim, fallback_dim);
    }
    const double c = o.find("conformal") ? o.find("conformal")->number() : 0.0;
    return build(v.path(), [&] { return MetricField::conformal(g, c); });
  };
  auto dim_or = [&](int d) { return o.find("dim") ? o.find("dim")->integer_at_least(1) : d; };

  std::function<FinslerFunction()> make;
  switch (*kind) {
    case MetricKind::euclidean: {
      const int m = o.at("dim").integer_at_least(1);
      make = [m] { return FinslerFunction::euclidean(m); };
      break;
    }
    case MetricKind::squared_norm: {
      const int m = o.at("dim").integer_at_least(1);
      make = [m] { return FinslerFunction::squared_norm(m); };
      break;
    }
    case MetricKind::riemannian: {
      const MetricField g = metric_field(dim_or(0));
      make = [g] { return FinslerFunction::riemannian(g); };
      break;
    }
    case MetricKind::randers: {
      const Vec b = o.at("b").vector();
      const MetricField g = metric_field(static_cast<int>(b.size()));
      make = [g, b] { return FinslerFunction::randers(g, b); };
      break;
    }
    case MetricKind::mth_root: {
      const Vec a = o.at("coefficients").vector();
      const int root = o.find("root") ? o.find("root")->integer() : 4;
      make = [a, root] { return FinslerFunction::mth_root(a, root); };
      break;
    }
    case MetricKind::areal_gram: {
      const int k = o.at("k").integer_at_least(1);
      const int m = o.at("dim").integer_at_least(1);
      make = [k, m] { return FinslerFunction::areal_gram(k, m); };
      break;
    }
  }
  o.finish();
  return build(v.path(), make);
}

KForm parse_form(Value v) {
  Object o = v.object();
  const int k = o.at("degree").integer_at_least(0);
  const int m = o.at("dim").integer_at_least(1);
  if (k > m) v.error("form degree exceeds its dimension");
  std::vector<std::pair<MultiIndex, Polynomial>> terms;
  if (k == 0) {
    const Polynomial p = parse_polynomial(o.at("function"), m);
    o.finish();
    return build(v.path(), [&] { return KForm::polynomial(0, m, {p}); });
  }
  for (const auto& t : o.at("terms").array()) {
    Object to = t.object();
    const Value iv = to.at("index");
    std::vector<int> idx;
    for (const auto& x : iv.array()) idx.push_back(x.integer());
    MultiIndex I = build(iv.path(), [&] { return MultiIndex(idx, m); });
    if (I.degree() != k) iv.error("index has the wrong length for a " + std::to_string(k) + "-form");
    terms.emplace_back(std::move(I), parse_polynomial(to.at("coef"), m));
    to.finish();
  }
  o.finish();
  return build(v.path(), [&] { return KForm::from_terms(k, m, terms); });
}

namespace {

Geometry parse_geometry(Value v) {
  Object o = v.object();
  Geometry g;
  if (auto x = o.find("map")) g.map = parse_map(*x);
  const bool has_interval = o.has("interval"), has_box = o.has("box");
  if (has_interval && has_box) v.error("give either 'interval' or 'box', not both");
  if (auto x = o.find("interval")) g.box = parse_interval(*x);
  if (auto x = o.find("box")) g.box = parse_box(*x);
  if (auto x = o.find("orientation")) {
    g.orientation = x->integer();
    if (g.orientation != 1 && g.orientation != -1) x->error("orientation must be 1 or -1");
  }
  o.finish();
  if (g.map && g.box) {
    if (g.map->domain_dim() != g.box->dim()) {
      v.error("map '" + g.map->name() + "' takes " + std::to_string(g.map->domain_dim()) +
              " parameters, the box has " + std::to_string(g.box->dim()));
    }
  }
  return g;
}

VariationSpec parse_variation(Value v, const Scenario& s) {
  if (!s.geometry.is_curve()) v.error("variations need a curve geometry with an interval");
  const double a = s.geometry.box->lo[0], b = s.geometry.box->hi[0];
  const int m = s.geometry.map->codomain_dim();
  Object o = v.object();
  VariationSpec spec;
  if (auto x = o.find("epsilon")) spec.epsilon = x->positive();
  if (auto x = o.find("expect_extremal")) spec.expect_extremal = x->boolean();
  if (auto x = o.find("tolerance")) spec.tolerance = x->positive();
  int max_frequency = 4;
  if (auto x = o.find("max_frequency")) max_frequency = x->integer_at_least(1);
  if (auto x = o.find("fields")) {
    for (const auto& f : x->array()) {
      Object fo = f.object();
      const std::string kind = fo.at("kind").string();
      const int j = fo.find("j") ? fo.find("j")->integer_at_least(1) : 1;
      if (kind == "sine_bump") {
        const Value dv = fo.at("direction");
        const Vec d = dv.vector();
        if (d.size() != m) dv.error("direction must have " + std::to_string(m) + " entries");
        spec.fields.push_back(build(f.path(), [&] { return VariationField::sine_bump(a, b, j, d); }));
      } else if (kind == "radial_bump") {
        if (m != 2) f.error("radial bumps are planar");
        spec.fields.push_back(build(f.path(), [&] { return VariationField::radial_bump(a, b, j); }));
      } else {
        fo.at("kind").error("unknown variation field '" + kind + "' (sine_bump, radial_bump)");
      }
      fo.finish();
    }
  } else {
    spec.fields = build(v.path(), [&] { return VariationField::default_basis(m, a, b, max_frequency); });
  }
  o.finish();
  return spec;
}

CheckSpec parse_check(Value v, const Scenario& s, const std::optional<KForm>& top_form) {
  Object o = v.object();
  const Value namev = o.at("name");
  const std::string name = namev.string();
  const auto it = kCheckNames.find(name);
  if (it == kCheckNames.end()) namev.error("unknown check '" + name + "'");
  CheckSpec c;
  c.kind = it->second;
  c.name = name;
  if (auto x = o.find("label")) c.name = x->string();
  c.tolerance = o.at("tolerance").positive();
  if (auto x = o.find("samples")) c.samples = x->integer_at_least(1);
  if (auto x = o.find("lambdas")) {
    c.lambdas = x->numbers();
    if (c.lambdas.empty()) x->error("at least one scaling factor");
    for (double l : c.lambdas) {
      if (!(l > 0.0)) x->error("scaling factors must be positive");
    }
  }
  if (auto x = o.find("form")) c.form = parse_form(*x);
  else c.form = top_form;

  const auto need_metric = [&] {
    if (!s.metric) v.error("check '" + name + "' needs a metric");
  };
  const auto need_curve = [&] {
    need_metric();
    if (!s.geometry.is_curve()) v.error("check '" + name + "' needs a curve geometry with an interval");
    if (s.geometry.map->codomain_dim() != s.metric->dim() || s.metric->degree() != 1) {
      v.error("the curve does not live in the metric's chart");
    }
  };
  const auto need_piece_and_form = [&] {
    if (!s.geometry.map || !s.geometry.box) v.error("check '" + name + "' needs geometry map and box");
    if (!c.form) v.error("check '" + name + "' needs a form");
    if (c.form->dim() != s.geometry.map->codomain_dim()) v.error("form and geometry dimensions differ");
  };

  switch (c.kind) {
    case CheckKind::homogeneity:
    case CheckKind::projectability:
    case CheckKind::euler_identity:
    case CheckKind::fiber_gradient:
      need_metric();
      break;
    case CheckKind::pullback_identity:
      need_curve();
      break;
    case CheckKind::reparam_invariance: {
      need_curve();
      c.map = parse_map(o.at("reparam"));
      if (c.map->domain_dim() != 1 || c.map->codomain_dim() != 1 || !c.map->inverse()) {
        v.error("reparametrization must be an invertible map R -> R");
      }
      break;
    }
    case CheckKind::stokes:
      need_piece_and_form();
      if (c.form->degree() + 1 != s.geometry.box->dim()) v.error("Stokes needs a (k-1)-form on a k-piece");
      break;
    case CheckKind::domain_transform:
      need_piece_and_form();
      c.map = parse_map(o.at("alpha"));
      if (c.map->domain_dim() != c.map->codomain_dim() || c.map->codomain_dim() != c.form->dim()) {
        v.error("alpha must be a square map on the form's chart");
      }
      if (!c.map->inverse()) v.error("alpha must have a catalog inverse");
      if (c.form->degree() != s.geometry.box->dim()) v.error("form degree must match the piece");
      break;
    case CheckKind::leibniz:
      need_piece_and_form();
      if (auto x = o.find("profile")) c.profile = parse_profile(*x);
      if (auto x = o.find("t0")) c.t0 = x->number();
      if (auto x = o.find("dt_step")) c.dt_step = x->positive();
      if (c.form->degree() != s.geometry.box->dim()) v.error("form degree must match the piece");
      break;
    case CheckKind::partition_independence: {
      need_piece_and_form();
      if (c.form->degree() != s.geometry.box->dim()) v.error("form degree must match the piece");
      const Value cv = o.at("covers");
      for (const auto& cover : cv.array()) {
        std::vector<Box> boxes;
        for (const auto& b : cover.array()) {
          Box box = parse_box(b);
          if (box.dim() != s.geometry.box->dim()) b.error("cover box has the wrong dimension");
          boxes.push_back(std::move(box));
        }
        if (boxes.empty()) cover.error("empty cover");
        // validate now so that bad covers are input errors
        build(cover.path(), [&] { return PartitionOfUnity::mollified(*s.geometry.box, boxes); });
        c.covers.push_back(std::move(boxes));
      }
      if (c.covers.empty()) cv.error("at least one cover");
      break;
    }
  }
  o.finish();
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot read scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Scenario parse_scenario(const std::string& text, Command command) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "invalid JSON at " + describe_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  Object root(j, "");
  Scenario s;
  const Value version = root.at("version");
  if (!version.raw().is_string() || version.string() != kSchemaVersion) {
    version.error(std::string("unsupported schema version (expected \"") + kSchemaVersion + "\")");
  }
  if (auto x = root.find("name")) s.name = x->string();
  if (auto x = root.find("command")) {
    s.command = command_from_string(x->string());
    if (!s.command) x->error("unknown command '" + x->string() + "'");
    if (*s.command != command) {
      x->error("scenario is for '" + std::string(to_string(*s.command)) + "', not '" +
               std::string(to_string(command)) + "'");
    }
  }
  if (auto x = root.find("metric")) s.metric = parse_metric(*x);
  if (auto x = root.find("geometry")) s.geometry = parse_geometry(*x);
  if (auto x = root.find("quadrature")) s.quadrature = parse_quadrature(*x);
  if (auto x = root.find("expected")) {
    Object o = x->object();
    if (auto y = o.find("value")) s.expected.value = y->number();
    if (auto y = o.find("tolerance")) s.expected.tolerance = y->positive();
    o.finish();
  }
  std::optional<KForm> top_form;
  if (auto x = root.find("form")) top_form = parse_form(*x);
  if (auto x = root.find("checks")) {
    for (const auto& c : x->array()) s.checks.push_back(parse_check(c, s, top_form));
  }
  if (auto x = root.find("variation")) s.variation = parse_variation(*x, s);
  if (auto x = root.find("output")) {
    Object o = x->object();
    if (auto y = o.find("csv")) s.csv_path = y->string();
    if (auto y = o.find("report")) s.report_path = y->string();
    if (auto y = o.find("plot")) s.plot_path = y->string();
    o.finish();
  }
  root.finish();

  // what each command needs
  switch (command) {
    case Command::length:
    case Command::variation:
      if (!s.metric) throw SchemaError("", "missing required field 'metric'");
      if (!s.geometry.is_curve()) throw SchemaError("/geometry", "needs a curve 'map' and an 'interval'");
      if (s.metric->degree() != 1 || s.metric->dim() != s.geometry.map->codomain_dim()) {
        throw SchemaError("/metric", "metric does not match the curve's ambient dimension");
      }
      if (command == Command::variation && !s.variation) {
        s.variation = build("/variation", [&] {
          VariationSpec spec;
          spec.fields = VariationField::default_basis(s.geometry.map->codomain_dim(),
                                                      s.geometry.box->lo[0], s.geometry.box->hi[0]);
          return spec;
        });
      }
      break;
    case Command::area:
      if (!s.metric) throw SchemaError("", "missing required field 'metric'");
      if (!s.geometry.map || !s.geometry.box) throw SchemaError("/geometry", "needs a 'map' and a 'box'");
      if (s.metric->degree() != s.geometry.box->dim() ||
          s.metric->dim() != s.geometry.map->codomain_dim()) {
        throw SchemaError("/metric", "Lagrangian degree/dimension does not match the piece");
      }
      break;
    case Command::check:
      if (s.checks.empty()) throw SchemaError("/checks", "a check scenario needs at least one check");
      break;
  }
  return s;
}

Scenario load_scenario(const std::string& path, Command command) {
  return parse_scenario(read_file(path), command);
}

}  // namespace variform::cli
