#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <variform/error.hpp>
#include <variform/kvector.hpp>

namespace variform::cli {

Row Row::measured(std::string name, double value, double expected, double tolerance) {
  Row r;
  r.name = std::move(name);
  r.value = value;
  r.expected = expected;
  r.tolerance = tolerance;
  r.residual = std::abs(value - expected);
  r.status = *r.residual <= tolerance ? Status::pass : Status::fail;
  return r;
}

Row Row::bounded(std::string name, double residual, double tolerance) {
  return measured(std::move(name), residual, 0.0, tolerance);
}

Row Row::at_least(std::string name, double value, double bound) {
  Row r;
  r.name = std::move(name);
  r.value = value;
  r.expected = bound;
  r.tolerance = 0.0;
  r.residual = std::max(0.0, bound - value);
  r.lower_bound = true;
  r.status = *r.residual <= 0.0 ? Status::pass : Status::fail;
  return r;
}

Row Row::info(std::string name, double value) {
  Row r;
  r.name = std::move(name);
  r.value = value;
  return r;
}

std::size_t RunResult::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == Status::fail;
  return n;
}

std::string full_precision(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_number(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s = buf;
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mant = s.substr(0, e), exp = s.substr(e + 1);
  std::string sign;
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
    if (exp[0] == '-') sign = "-";
    exp.erase(0, 1);
  }
  exp.erase(0, std::min(exp.find_first_not_of('0'), exp.size() - 1));
  return mant + "e" + sign + exp;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
Row timed(F&& f) {
  const auto t0 = Clock::now();
  Row r = f();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

SamplingSpec sampling(const CheckSpec& c, const RunOptions& o) {
  SamplingSpec s;
  s.samples = c.samples;
  s.lambdas = c.lambdas;
  s.seed = o.seed;
  return s;
}

Row run_check(const CheckSpec& c, const Scenario& s, const RunOptions& o) {
  const QuadratureSpec& q = s.quadrature;
  switch (c.kind) {
    case CheckKind::homogeneity:
      return Row::bounded(c.name, check_homogeneity(*s.metric, sampling(c, o)), c.tolerance);
    case CheckKind::projectability:
      return Row::bounded(c.name, check_projectability(*s.metric, sampling(c, o)), c.tolerance);
    case CheckKind::euler_identity:
      return Row::bounded(c.name, check_euler_identity(*s.metric, sampling(c, o)), c.tolerance);
    case CheckKind::fiber_gradient:
      return Row::bounded(c.name, check_fiber_gradient(*s.metric, sampling(c, o)), c.tolerance);
    case CheckKind::pullback_identity: {
      const double a = s.geometry.box->lo[0], b = s.geometry.box->hi[0];
      std::vector<double> ts;
      for (int i = 0; i < c.samples; ++i) ts.push_back(a + (b - a) * (i + 0.5) / c.samples);
      return Row::bounded(c.name, pullback_identity_residual(*s.metric, *s.geometry.map, ts), c.tolerance);
    }
    case CheckKind::reparam_invariance: {
      const IdentityCheck r = reparam_invariance_residual(*s.metric, *s.geometry.map, s.geometry.box->lo[0],
                                                          s.geometry.box->hi[0], *c.map, q);
      return Row::bounded(c.name, r.residual, c.tolerance);
    }
    case CheckKind::stokes:
      return Row::bounded(c.name, verify_stokes(*c.form, s.geometry.piece(), q).residual, c.tolerance);
    case CheckKind::domain_transform:
      return Row::bounded(c.name, verify_domain_transform(*c.form, *c.map, s.geometry.piece(), q).residual,
                          c.tolerance);
    case CheckKind::leibniz:
      return Row::bounded(
          c.name,
          verify_leibniz(scaled_family(*c.form, c.profile), s.geometry.piece(), c.t0, c.dt_step, q).residual,
          c.tolerance);
    case CheckKind::partition_independence: {
      const Piece piece = s.geometry.piece();
      std::vector<double> values{integrate(*c.form, piece, q)};
      for (const auto& cover : c.covers) {
        const auto p = PartitionOfUnity::mollified(piece.param_box, cover);
        values.push_back(integrate_with_partition(*c.form, piece, p, q));
      }
      double worst = 0.0;
      for (double a : values)
        for (double b : values) worst = std::max(worst, std::abs(a - b));
      return Row::bounded(c.name, worst, c.tolerance);
    }
  }
  fail(Errc::invalid_argument, "unknown check");
}

void add_checks(const Scenario& s, const RunOptions& o, RunResult& out) {
  for (const auto& c : s.checks) out.rows.push_back(timed([&] { return run_check(c, s, o); }));
}

void run_length(const Scenario& s, RunResult& out) {
  const double a = s.geometry.box->lo[0], b = s.geometry.box->hi[0];
  LengthResult L;
  Row main = timed([&] {
    L = curve_length(*s.metric, *s.geometry.map, a, b, s.quadrature);
    return s.expected.value ? Row::measured("length", L.value, *s.expected.value, s.expected.tolerance)
                            : Row::info("length", L.value);
  });
  out.rows.push_back(main);
  // Theorem-style cross-check: the Hilbert-form route must reproduce the
  // direct value whenever the metric is homogeneous
  if (L.homogeneity_residual <= 1e-11) {
    out.rows.push_back(Row::measured("hilbert_length", L.hilbert_value, L.value, 1e-10));
  } else {
    out.rows.push_back(Row::info("hilbert_length", L.hilbert_value));
  }
  out.warnings.insert(out.warnings.end(), L.warnings.begin(), L.warnings.end());
}

void run_area(const Scenario& s, RunResult& out) {
  ArealResult A;
  out.rows.push_back(timed([&] {
    A = areal_value(*s.metric, s.geometry.piece(), s.quadrature);
    return s.expected.value ? Row::measured("area", A.value, *s.expected.value, s.expected.tolerance)
                            : Row::info("area", A.value);
  }));
  out.warnings.insert(out.warnings.end(), A.warnings.begin(), A.warnings.end());
  const std::size_t bad = s.geometry.piece().count_degenerate();
  if (bad > 0) {
    out.warnings.push_back("parametrization is degenerate at " + std::to_string(bad) + " sample point(s)");
  }
}

void run_variation(const Scenario& s, RunResult& out) {
  const VariationSpec& v = *s.variation;
  double worst = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < v.fields.size(); ++i) {
    VariationResult r;
    out.rows.push_back(timed([&] {
      r = first_variation(*s.metric, *s.geometry.map, v.fields[i], v.epsilon, s.quadrature);
      return Row::info("first_variation_" + std::to_string(i + 1), r.value);
    }));
    worst = std::max(worst, std::abs(r.value));
    drift = std::max(drift, std::abs(r.value - r.half_step));
  }
  out.rows.push_back(v.expect_extremal ? Row::bounded("extremal_residual", worst, v.tolerance)
                                       : Row::at_least("extremal_residual", worst, v.tolerance));
  // two-step Richardson consistency of the central differences
  out.rows.push_back(Row::bounded("richardson_consistency", drift, 1e-5));
}

}  // namespace

RunResult run(Command command, const Scenario& s, const RunOptions& o) {
  RunResult out;
  switch (command) {
    case Command::length: run_length(s, out); break;
    case Command::area: run_area(s, out); break;
    case Command::variation: run_variation(s, out); break;
    case Command::check: break;
  }
  add_checks(s, o, out);
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "?";
}

std::string opt(const std::optional<double>& x) { return x ? full_precision(*x) : std::string(); }

}  // namespace

std::string format_csv(const RunResult& result, bool timings) {
  std::string out = "name,value,expected,tolerance,residual,status,seconds\n";
  for (const auto& r : result.rows) {
    out += csv_field(r.name) + ',' + full_precision(r.value) + ',' + opt(r.expected) + ',' +
           opt(r.tolerance) + ',' + opt(r.residual) + ',' + std::string(status_name(r.status)) + ',';
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string format_report(Command command, const Scenario& s, const std::string& path,
                          const RunOptions& o, const RunResult& result) {
  std::ostringstream os;
  os << "# variform " << to_string(command) << '\n';
  os << "# scenario: " << path;
  if (!s.name.empty()) os << " (" << s.name << ')';
  os << '\n';
  os << "# seed: " << o.seed << '\n';
  os << "# quadrature: gauss_order=" << s.quadrature.gauss_order
     << " cells_per_axis=" << s.quadrature.cells_per_axis
     << " adaptive=" << (s.quadrature.adaptive ? "true" : "false") << '\n';
  if (s.metric) os << "# metric: " << s.metric->describe() << '\n';
  if (s.geometry.map) os << "# geometry: " << s.geometry.map->name() << '\n';
  for (const auto& r : result.rows) {
    os << r.name << " = " << short_number(r.value);
    if (r.status != Status::info) {
      os << " (";
      if (r.lower_bound) {
        os << "at least " << short_number(*r.expected);
      } else if (*r.expected != 0.0) {
        os << "expected " << short_number(*r.expected) << ", residual "
           << (r.status == Status::pass ? "< " : short_number(*r.residual, 3) + " > ")
           << short_number(*r.tolerance);
      } else {
        os << "residual " << (r.status == Status::pass ? "< " : short_number(*r.residual, 3) + " > ")
           << short_number(*r.tolerance);
      }
      os << ", " << status_name(r.status) << ')';
    }
    if (o.timings) os << " [" << short_number(r.seconds, 3) << " s]";
    os << '\n';
  }
  for (const auto& w : result.warnings) os << "warning: " << w << '\n';
  const std::size_t failed = result.failures();
  std::size_t passed = 0;
  for (const auto& r : result.rows) passed += r.status == Status::pass;
  os << "result: " << (failed ? "FAIL" : "PASS") << " (" << passed << " passed, " << failed
     << " failed)\n";
  return os.str();
}

std::string format_plot(Command command, const Scenario& s) {
  const Box& box = *s.geometry.box;
  const int k = box.dim();
  const int per_axis = k == 1 ? 201 : std::max(2, static_cast<int>(std::pow(2601.0, 1.0 / k)));
  std::string out;
  for (int a = 1; a <= k; ++a) out += "t" + std::to_string(a) + ',';
  out += "integrand\n";

  const auto integrand = [&](const Vec& t) -> double {
    try {
      if (command == Command::area) {
        const KVector xi = canonical_lift(*s.geometry.map, t);
        return (*s.metric)(xi.base(), s.geometry.orientation * xi.comps());
      }
      const Vec y = (*s.geometry.map)(t);
      return (*s.metric)(y, s.geometry.map->jacobian(t).col(0));
    } catch (const Error&) {
      return std::nan("");
    }
  };

  std::vector<int> at(static_cast<std::size_t>(k), 0);
  Vec t(k);
  for (bool more = true; more;) {
    for (int a = 0; a < k; ++a) t[a] = box.lo[a] + (box.hi[a] - box.lo[a]) * at[a] / (per_axis - 1);
    for (int a = 0; a < k; ++a) out += full_precision(t[a]) + ',';
    out += full_precision(integrand(t)) + '\n';
    more = false;
    for (int a = k - 1; a >= 0 && !more; --a) {
      if (++at[a] < per_axis) more = true;
      else at[a] = 0;
    }
  }
  return out;
}

}  // namespace variform::cli
