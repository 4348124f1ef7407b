#include "variform/forms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "variform/error.hpp"
#include "variform/kvector.hpp"
#include "variform/maps.hpp"

namespace variform {

// ---------------------------------------------------------------- KForm

KForm::KForm(int degree, int dim, ValuesFn values, PartialsFn partials, double fd_step)
    : degree_(degree),
      dim_(dim),
      size_(component_count(degree, dim)),
      values_(std::move(values)),
      partials_(std::move(partials)),
      fd_step_(fd_step) {
  if (dim_ < 1) fail(Errc::invalid_argument, "form dimension must be >= 1");
  if (!values_) fail(Errc::invalid_argument, "form without coefficient evaluator");
  if (!(fd_step_ > 0.0)) fail(Errc::invalid_argument, "fd_step must be positive");
}

KForm KForm::zero(int degree, int dim) {
  return constant(degree, dim, Vec::Zero(static_cast<Eigen::Index>(component_count(degree, dim))));
}

KForm KForm::constant(int degree, int dim, Vec coeffs) {
  const auto n = static_cast<Eigen::Index>(component_count(degree, dim));
  if (coeffs.size() != n) fail(Errc::dimension_mismatch, "constant form coefficient count");
  std::vector<Polynomial> polys;
  for (Eigen::Index i = 0; i < n; ++i) polys.push_back(Polynomial::constant(dim, coeffs[i]));
  return polynomial(degree, dim, std::move(polys));
}

KForm KForm::polynomial(int degree, int dim, std::vector<Polynomial> coeffs) {
  const std::size_t n = component_count(degree, dim);
  if (coeffs.size() != n) fail(Errc::dimension_mismatch, "polynomial form coefficient count");
  for (const auto& p : coeffs) {
    if (p.num_vars() != dim) fail(Errc::dimension_mismatch, "coefficient variable count");
  }
  auto shared = std::make_shared<const std::vector<Polynomial>>(coeffs);
  auto partial_polys = std::make_shared<std::vector<std::vector<Polynomial>>>();
  for (const auto& p : coeffs) {
    std::vector<Polynomial> row;
    for (int j = 0; j < dim; ++j) row.push_back(p.derivative(j));
    partial_polys->push_back(std::move(row));
  }
  KForm form(
      degree, dim,
      [shared](const Vec& y) {
        Vec v(static_cast<Eigen::Index>(shared->size()));
        for (std::size_t i = 0; i < shared->size(); ++i) v[static_cast<Eigen::Index>(i)] = (*shared)[i](y);
        return v;
      },
      [partial_polys, dim](const Vec& y) {
        Mat P(static_cast<Eigen::Index>(partial_polys->size()), dim);
        for (std::size_t i = 0; i < partial_polys->size(); ++i) {
          for (int j = 0; j < dim; ++j) P(static_cast<Eigen::Index>(i), j) = (*partial_polys)[i][j](y);
        }
        return P;
      });
  form.poly_ = std::move(coeffs);
  return form;
}

KForm KForm::from_terms(int degree, int dim,
                        const std::vector<std::pair<MultiIndex, Polynomial>>& terms) {
  std::vector<Polynomial> coeffs(component_count(degree, dim), Polynomial(dim));
  for (const auto& [index, p] : terms) {
    if (index.degree() != degree || index.dim() != dim) {
      fail(Errc::dimension_mismatch, "term index " + index.to_string() + " does not fit the form");
    }
    auto& slot = coeffs[rank(index)];
    slot = slot + p;
  }
  return polynomial(degree, dim, std::move(coeffs));
}

Vec KForm::coefficients(const Vec& y) const {
  if (y.size() != dim_) fail(Errc::dimension_mismatch, "form evaluated at wrong dimension");
  Vec v = values_(y);
  if (static_cast<std::size_t>(v.size()) != size_) {
    fail(Errc::evaluation, "form evaluator returned wrong component count");
  }
  if (!v.allFinite()) fail(Errc::evaluation, "non-finite form coefficient");
  return v;
}

Mat KForm::partials(const Vec& y) const {
  if (partials_) {
    if (y.size() != dim_) fail(Errc::dimension_mismatch, "form evaluated at wrong dimension");
    return partials_(y);
  }
  Mat P(static_cast<Eigen::Index>(size_), dim_);
  Vec yp = y;
  for (int j = 0; j < dim_; ++j) {
    yp[j] = y[j] + fd_step_;
    const Vec fp = coefficients(yp);
    yp[j] = y[j] - fd_step_;
    const Vec fm = coefficients(yp);
    yp[j] = y[j];
    P.col(j) = (fp - fm) / (2.0 * fd_step_);
  }
  return P;
}

KForm KForm::scaled(double s) const {
  if (poly_) {
    std::vector<Polynomial> p;
    for (const auto& c : *poly_) p.push_back(c * s);
    return polynomial(degree_, dim_, std::move(p));
  }
  PartialsFn partials;
  if (partials_) {
    partials = [inner = partials_, s](const Vec& y) -> Mat { return s * inner(y); };
  }
  return KForm(
      degree_, dim_, [inner = values_, s](const Vec& y) -> Vec { return s * inner(y); },
      std::move(partials), fd_step_);
}

KForm KForm::operator+(const KForm& other) const {
  if (other.degree_ != degree_ || other.dim_ != dim_) {
    fail(Errc::dimension_mismatch, "adding forms of different shape");
  }
  if (poly_ && other.poly_) {
    std::vector<Polynomial> p;
    for (std::size_t i = 0; i < size_; ++i) p.push_back((*poly_)[i] + (*other.poly_)[i]);
    return polynomial(degree_, dim_, std::move(p));
  }
  const KForm a = *this;
  const KForm b = other;
  PartialsFn partials;
  if (a.partials_ && b.partials_) {
    partials = [a, b](const Vec& y) -> Mat { return a.partials(y) + b.partials(y); };
  }
  return KForm(
      degree_, dim_, [a, b](const Vec& y) -> Vec { return a.coefficients(y) + b.coefficients(y); },
      std::move(partials), std::min(fd_step_, other.fd_step_));
}

// ---------------------------------------------------------------- Piece

Piece::Piece(Box box, DifferentiableMap parametrization, int orient)
    : param_box(std::move(box)), map(std::move(parametrization)), orientation(orient) {
  if (map.domain_dim() != param_box.dim()) {
    fail(Errc::dimension_mismatch, "piece parametrization domain does not match its box");
  }
  if (param_box.dim() > map.codomain_dim()) {
    fail(Errc::invalid_degree, "piece dimension exceeds the chart dimension");
  }
  if (orientation != 1 && orientation != -1) {
    fail(Errc::invalid_argument, "piece orientation must be +1 or -1");
  }
}

std::size_t Piece::count_degenerate(int samples_per_axis) const {
  if (degree() == 0) return 0;
  QuadratureSpec grid;
  grid.gauss_order = 1;  // the midpoint of every cell
  grid.cells_per_axis = samples_per_axis;
  std::size_t bad = 0;
  for_each_node(param_box, grid, [&](const Vec& t, double) {
    const Mat J = map.jacobian(t);
    if (degenerate_lift(J, wedge(map(t), J))) ++bad;
  });
  return bad;
}

// ---------------------------------------------------------------- PartitionOfUnity

namespace {

double bump(double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; }

}  // namespace

PartitionOfUnity PartitionOfUnity::mollified(const Box& param_box, std::vector<Box> cover) {
  if (cover.empty()) fail(Errc::invalid_partition, "empty cover");
  const int k = param_box.dim();
  auto extended = std::make_shared<std::vector<Box>>();
  std::vector<Box> supports;
  for (const Box& b : cover) {
    if (b.dim() != k) fail(Errc::dimension_mismatch, "cover box dimension");
    Vec lo = b.lo, hi = b.hi;
    Vec slo(k), shi(k);
    for (int a = 0; a < k; ++a) {
      slo[a] = std::max(b.lo[a], param_box.lo[a]);
      shi[a] = std::min(b.hi[a], param_box.hi[a]);
      if (!(slo[a] < shi[a])) fail(Errc::invalid_partition, "cover box misses the parameter box");
      // a face on (or beyond) the boundary is reflected outward so the bump
      // stays positive up to the boundary
      if (b.lo[a] <= param_box.lo[a]) lo[a] = param_box.lo[a] - (b.hi[a] - param_box.lo[a]);
      if (b.hi[a] >= param_box.hi[a]) hi[a] = param_box.hi[a] + (param_box.hi[a] - b.lo[a]);
    }
    extended->push_back(Box(lo, hi));
    supports.emplace_back(std::move(slo), std::move(shi));
  }

  auto raw = [extended](std::size_t j, const Vec& t) {
    const Box& b = (*extended)[j];
    double v = 1.0;
    for (Eigen::Index a = 0; a < t.size(); ++a) {
      v *= bump((2.0 * t[a] - b.lo[a] - b.hi[a]) / (b.hi[a] - b.lo[a]));
    }
    return v;
  };
  auto total = [extended, raw](const Vec& t) {
    double s = 0.0;
    for (std::size_t j = 0; j < extended->size(); ++j) s += raw(j, t);
    return s;
  };

  // coverage on a grid that includes the corners; finer gaps surface as
  // errors during integration
  const int per_axis = std::max(2, static_cast<int>(std::pow(4096.0, 1.0 / std::max(k, 1))));
  std::vector<int> at(static_cast<std::size_t>(k), 0);
  Vec t(k);
  for (bool more = k > 0; more;) {
    for (int a = 0; a < k; ++a) {
      t[a] = param_box.lo[a] + (param_box.hi[a] - param_box.lo[a]) * at[a] / (per_axis - 1);
    }
    if (!(total(t) > 0.0)) fail(Errc::invalid_partition, "cover leaves parameter points uncovered");
    more = false;
    for (int a = 0; a < k && !more; ++a) {
      if (++at[a] < per_axis) more = true;
      else at[a] = 0;
    }
  }

  std::vector<Function> functions;
  for (std::size_t j = 0; j < extended->size(); ++j) {
    functions.push_back([j, raw, total](const Vec& t) {
      const double s = total(t);
      if (!(s > 0.0)) fail(Errc::invalid_partition, "point not covered by any cover box");
      return raw(j, t) / s;
    });
  }
  return from_functions(std::move(functions), std::move(supports));
}

PartitionOfUnity PartitionOfUnity::from_functions(std::vector<Function> functions,
                                                  std::vector<Box> supports) {
  if (functions.empty()) fail(Errc::invalid_partition, "empty partition");
  if (functions.size() != supports.size()) {
    fail(Errc::invalid_partition, "one support box per partition function required");
  }
  PartitionOfUnity p;
  p.functions_ = std::move(functions);
  p.supports_ = std::move(supports);
  return p;
}

double PartitionOfUnity::sum(const Vec& t) const {
  double s = 0.0;
  for (const auto& f : functions_) s += f(t);
  return s;
}

// ---------------------------------------------------------------- pullback & integration

KForm pullback(const KForm& eta, const DifferentiableMap& f) {
  const int k = eta.degree();
  const int n = f.domain_dim();
  if (f.codomain_dim() != eta.dim()) {
    fail(Errc::dimension_mismatch, "form lives on R^" + std::to_string(eta.dim()) +
                                       ", map lands in R^" + std::to_string(f.codomain_dim()));
  }
  if (k > n) {
    fail(Errc::invalid_degree, "cannot pull a " + std::to_string(k) + "-form back to R^" +
                                   std::to_string(n));
  }
  if (n == 0) fail(Errc::invalid_argument, "pullback to a zero-dimensional domain");
  return KForm(
      k, n,
      [eta, f, k](const Vec& t) -> Vec {
        const Vec c = eta.coefficients(f(t));
        if (k == 0) return c;
        return compound_matrix(f.jacobian(t), k).transpose() * c;
      },
      {}, eta.fd_step());
}

namespace {

// Orientation-free density of eta pulled back along the piece at t.
double pulled_density(const KForm& eta, const Piece& piece, const Vec& t,
                      IntegrationDiagnostics* diag) {
  const Vec y = piece.map(t);
  const Vec c = eta.coefficients(y);
  if (piece.degree() == 0) return c[0];
  const Mat J = piece.map.jacobian(t);
  const KVector lift = wedge(y, J);
  if (diag && degenerate_lift(J, lift)) ++diag->degenerate_nodes;
  return c.dot(lift.comps());
}

void check_piece_degree(const KForm& eta, const Piece& piece) {
  if (eta.degree() != piece.degree()) {
    fail(Errc::invalid_degree, "integrating a " + std::to_string(eta.degree()) + "-form over a " +
                                   std::to_string(piece.degree()) + "-piece");
  }
  if (eta.dim() != piece.ambient_dim()) {
    fail(Errc::dimension_mismatch, "form and piece live in different charts");
  }
}

}  // namespace

double integrate(const KForm& eta, const Piece& piece, const QuadratureSpec& spec,
                 IntegrationDiagnostics* diag) {
  check_piece_degree(eta, piece);
  IntegrationDiagnostics local;
  const double value = integrate_box(piece.param_box, spec, [&](const Vec& t) {
    return pulled_density(eta, piece, t, &local);
  });
  if (local.degenerate_nodes > 0) {
    local.warnings.push_back("parametrization '" + piece.map.name() + "' is degenerate at " +
                             std::to_string(local.degenerate_nodes) + " quadrature node(s)");
  }
  if (diag) {
    diag->degenerate_nodes += local.degenerate_nodes;
    diag->warnings.insert(diag->warnings.end(), local.warnings.begin(), local.warnings.end());
  }
  return piece.orientation * value;
}

double integrate_with_partition(const KForm& eta, const Piece& piece,
                                const PartitionOfUnity& partition, const QuadratureSpec& spec) {
  check_piece_degree(eta, piece);
  // chi_j varies on the scale of the overlaps, which can be much finer than
  // the uniform grid; refine each part adaptively from the requested grid.
  QuadratureSpec part_spec = spec;
  part_spec.adaptive = true;
  part_spec.target = std::min(spec.target, 1e-11);
  std::vector<double> parts;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    const Box& support = partition.support(j);
    if (support.dim() != piece.degree()) {
      fail(Errc::invalid_partition, "partition support has the wrong dimension");
    }
    // only the part of the support inside the parameter box contributes
    Vec lo = support.lo.cwiseMax(piece.param_box.lo);
    Vec hi = support.hi.cwiseMin(piece.param_box.hi);
    if ((hi - lo).minCoeff() <= 0.0) continue;
    parts.push_back(integrate_box(Box(lo, hi), part_spec, [&](const Vec& t) {
      const double total = partition.sum(t);
      if (std::abs(total - 1.0) > 1e-10) {
        fail(Errc::invalid_partition,
             "partition functions sum to " + std::to_string(total) + " at a quadrature node");
      }
      return partition(j, t) * pulled_density(eta, piece, t, nullptr);
    }));
  }
  return piece.orientation * pairwise_sum(parts);
}

KForm exterior_derivative(const KForm& eta) {
  const int k = eta.degree();
  const int m = eta.dim();
  if (k + 1 > m) {
    fail(Errc::invalid_degree, "d of a " + std::to_string(k) + "-form on R^" + std::to_string(m));
  }
  // (d eta)_K = sum over j not in I with {j} u I = K of sign(j, I) d_j eta_I
  struct Term {
    std::size_t target;
    std::size_t source;
    int var;  // 0-based
    int sign;
  };
  std::vector<Term> terms;
  if (k == 0) {
    for (int j = 0; j < m; ++j) terms.push_back({static_cast<std::size_t>(j), 0, j, 1});
  } else {
    const auto sources = enumerate(k, m);
    std::vector<int> tuple(static_cast<std::size_t>(k + 1));
    for (std::size_t I = 0; I < sources.size(); ++I) {
      for (int j = 1; j <= m; ++j) {
        if (sources[I].contains(j)) continue;
        tuple[0] = j;
        std::copy(sources[I].indices().begin(), sources[I].indices().end(), tuple.begin() + 1);
        const auto [K, sign] = normalize_tuple(tuple, m);
        terms.push_back({rank(K), I, j - 1, sign});
      }
    }
  }
  const std::size_t out_size = component_count(k + 1, m);

  if (const auto& poly = eta.polynomial_coefficients()) {
    std::vector<Polynomial> out(out_size, Polynomial(m));
    for (const auto& t : terms) {
      out[t.target] = out[t.target] + (*poly)[t.source].derivative(t.var) * t.sign;
    }
    return KForm::polynomial(k + 1, m, std::move(out));
  }
  return KForm(
      k + 1, m,
      [eta, terms, out_size](const Vec& y) {
        const Mat P = eta.partials(y);
        Vec v = Vec::Zero(static_cast<Eigen::Index>(out_size));
        for (const auto& t : terms) {
          v[static_cast<Eigen::Index>(t.target)] +=
              t.sign * P(static_cast<Eigen::Index>(t.source), t.var);
        }
        return v;
      },
      {}, eta.fd_step());
}

std::vector<Piece> boundary_faces(const Piece& piece) {
  const int k = piece.degree();
  if (k < 1) fail(Errc::invalid_degree, "a 0-piece has no boundary");
  std::vector<Piece> faces;
  const Box& box = piece.param_box;
  for (int a = 0; a < k; ++a) {
    Vec lo(k - 1), hi(k - 1);
    for (int b = 0, c = 0; b < k; ++b) {
      if (b == a) continue;
      lo[c] = box.lo[b];
      hi[c] = box.hi[b];
      ++c;
    }
    // axis number a + 1 is 1-based
    const int upper_sign = (a % 2 == 0) ? 1 : -1;
    for (const auto& [value, sign] : {std::pair{box.lo[a], -upper_sign}, std::pair{box.hi[a], upper_sign}}) {
      faces.emplace_back(Box(lo, hi), compose(piece.map, maps::face_inclusion(k, a, value)),
                         piece.orientation * sign);
    }
  }
  return faces;
}

IdentityCheck verify_stokes(const KForm& eta, const Piece& piece, const QuadratureSpec& spec) {
  if (eta.degree() + 1 != piece.degree()) {
    fail(Errc::invalid_degree, "Stokes check needs a (k-1)-form on a k-piece");
  }
  std::vector<double> face_values;
  for (const Piece& face : boundary_faces(piece)) face_values.push_back(integrate(eta, face, spec));
  IdentityCheck out;
  out.lhs = pairwise_sum(face_values);
  out.rhs = integrate(exterior_derivative(eta), piece, spec);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityCheck verify_domain_transform(const KForm& eta, const DifferentiableMap& alpha,
                                      const Piece& piece, const QuadratureSpec& spec) {
  if (alpha.domain_dim() != alpha.codomain_dim()) {
    fail(Errc::dimension_mismatch, "domain transformation must be square");
  }
  const auto inverse = alpha.inverse();
  if (!inverse) fail(Errc::invalid_argument, "map '" + alpha.name() + "' has no catalog inverse");
  const Piece preimage(piece.param_box, compose(*inverse, piece.map), piece.orientation);
  for_each_node(preimage.param_box, spec, [&](const Vec& t, double) {
    if (!(alpha.jacobian(preimage.map(t)).determinant() > 0.0)) {
      fail(Errc::orientation_violation, "map '" + alpha.name() + "' reverses orientation");
    }
  });
  IdentityCheck out;
  out.lhs = integrate(eta, piece, spec);
  out.rhs = integrate(pullback(eta, alpha), preimage, spec);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

FormFamily scaled_family(const KForm& base, FamilyProfile profile) {
  switch (profile) {
    case FamilyProfile::constant:
      return {[base](double) { return base; },
              [base](double) { return base.scaled(0.0); }};
    case FamilyProfile::linear:
      return {[base](double t) { return base.scaled(t); }, [base](double) { return base; }};
    case FamilyProfile::sine:
      return {[base](double t) { return base.scaled(std::sin(t)); },
              [base](double t) { return base.scaled(std::cos(t)); }};
  }
  fail(Errc::invalid_argument, "unknown family profile");
}

IdentityCheck verify_leibniz(const FormFamily& family, const Piece& piece, double t0,
                             double dt_step, const QuadratureSpec& spec) {
  if (!(dt_step > 0.0)) fail(Errc::invalid_argument, "dt_step must be positive");
  const double plus = integrate(family.at(t0 + dt_step), piece, spec);
  const double minus = integrate(family.at(t0 - dt_step), piece, spec);
  IdentityCheck out;
  out.lhs = (plus - minus) / (2.0 * dt_step);
  out.rhs = integrate(family.derivative(t0), piece, spec);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace variform
