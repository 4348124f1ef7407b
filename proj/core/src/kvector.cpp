#include "variform/kvector.hpp"

#include <cmath>
#include <vector>

#include "variform/error.hpp"
#include "variform/maps.hpp"

namespace variform {

namespace {

// S must already be k x k; reused across minors to avoid allocations.
void submatrix(const Mat& A, const MultiIndex& rows, const MultiIndex& cols, Mat& S) {
  const int k = rows.degree();
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) S(a, b) = A(rows[a] - 1, cols[b] - 1);
  }
}

double minor_det(const Mat& S) {
  switch (S.rows()) {
    case 1: return S(0, 0);
    case 2: return S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
    case 3:
      return S(0, 0) * (S(1, 1) * S(2, 2) - S(1, 2) * S(2, 1)) -
             S(0, 1) * (S(1, 0) * S(2, 2) - S(1, 2) * S(2, 0)) +
             S(0, 2) * (S(1, 0) * S(2, 1) - S(1, 1) * S(2, 0));
    default: return S.determinant();
  }
}

}  // namespace

KVector::KVector(Vec base, int degree, Vec comps)
    : base_(std::move(base)), degree_(degree), comps_(std::move(comps)) {
  const int m = dim();
  if (degree_ < 1 || degree_ > m) {
    fail(Errc::invalid_degree,
         "k-vector of degree " + std::to_string(degree_) + " over dimension " + std::to_string(m));
  }
  if (static_cast<std::size_t>(comps_.size()) != binomial(m, degree_)) {
    fail(Errc::dimension_mismatch, "k-vector needs " + std::to_string(binomial(m, degree_)) +
                                       " components, got " + std::to_string(comps_.size()));
  }
  if (!comps_.allFinite() || !base_.allFinite()) {
    fail(Errc::evaluation, "k-vector has non-finite entries");
  }
}

KVector KVector::zero(Vec base, int degree) {
  const auto n = static_cast<Eigen::Index>(binomial(static_cast<int>(base.size()), degree));
  return KVector(std::move(base), degree, Vec::Zero(n));
}

KVector KVector::basis(Vec base, const MultiIndex& index) {
  if (index.dim() != base.size()) fail(Errc::dimension_mismatch, "basis index dimension");
  KVector out = zero(std::move(base), index.degree());
  out.comps_[static_cast<Eigen::Index>(rank(index))] = 1.0;
  return out;
}

double KVector::operator[](const MultiIndex& index) const {
  if (index.degree() != degree_ || index.dim() != dim()) {
    fail(Errc::dimension_mismatch, "multi-index does not match k-vector shape");
  }
  return comps_[static_cast<Eigen::Index>(rank(index))];
}

double KVector::component(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_) {
    fail(Errc::dimension_mismatch, "tuple length does not match degree");
  }
  const auto [index, sign] = normalize_tuple(tuple, dim());
  if (sign == 0) return 0.0;
  return sign * (*this)[index];
}

double KVector::max_abs() const { return comps_.size() ? comps_.cwiseAbs().maxCoeff() : 0.0; }

KVector KVector::operator*(double s) const { return KVector(base_, degree_, s * comps_); }

KVector KVector::operator+(const KVector& other) const {
  if (other.degree_ != degree_ || other.dim() != dim()) {
    fail(Errc::dimension_mismatch, "adding k-vectors of different shape");
  }
  if ((other.base_ - base_).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, base_.cwiseAbs().maxCoeff())) {
    fail(Errc::invalid_argument, "adding k-vectors at different base points");
  }
  return KVector(base_, degree_, comps_ + other.comps_);
}

Mat compound_matrix(const Mat& A, int k) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (k < 1 || k > m || k > n) {
    fail(Errc::invalid_degree, "compound of order " + std::to_string(k) + " for a " +
                                   std::to_string(m) + "x" + std::to_string(n) + " matrix");
  }
  const auto rows = enumerate(k, m);
  const auto cols = enumerate(k, n);
  Mat C(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  Mat S(k, k);
  for (std::size_t I = 0; I < rows.size(); ++I) {
    for (std::size_t J = 0; J < cols.size(); ++J) {
      submatrix(A, rows[I], cols[J], S);
      C(static_cast<Eigen::Index>(I), static_cast<Eigen::Index>(J)) = minor_det(S);
    }
  }
  return C;
}

KVector wedge(const Vec& base, const Mat& vectors) {
  const int m = static_cast<int>(vectors.rows());
  const int k = static_cast<int>(vectors.cols());
  if (base.size() != m) {
    fail(Errc::dimension_mismatch, "vectors must have the base point's dimension");
  }
  if (k < 1 || k > m) fail(Errc::invalid_degree, "wedge of " + std::to_string(k) + " vectors");
  // one column of the compound: minors with rows I against all k columns
  const auto rows = enumerate(k, m);
  Vec comps(static_cast<Eigen::Index>(rows.size()));
  Mat S(k, k);
  for (std::size_t I = 0; I < rows.size(); ++I) {
    for (int a = 0; a < k; ++a) S.row(a) = vectors.row(rows[I][a] - 1);
    comps[static_cast<Eigen::Index>(I)] = minor_det(S);
  }
  return KVector(base, k, std::move(comps));
}

KVector wedge(const Vec& base, std::span<const Vec> vectors) {
  if (vectors.empty()) fail(Errc::invalid_degree, "wedge of no vectors");
  Mat M(base.size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != base.size()) {
      fail(Errc::dimension_mismatch, "vector " + std::to_string(j) + " has wrong dimension");
    }
    M.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return wedge(base, M);
}

KVector wedge(const KVector& a, const KVector& b) {
  if (a.dim() != b.dim()) fail(Errc::dimension_mismatch, "wedge of k-vectors in different spaces");
  const int m = a.dim();
  const int p = a.degree();
  const int q = b.degree();
  if (p + q > m) fail(Errc::invalid_degree, "wedge degree exceeds dimension");
  KVector out = KVector::zero(a.base(), p + q);
  Vec comps = out.comps();
  const auto left = enumerate(p, m);
  const auto right = enumerate(q, m);
  std::vector<int> tuple(static_cast<std::size_t>(p + q));
  for (std::size_t I = 0; I < left.size(); ++I) {
    const double ai = a.comps()[static_cast<Eigen::Index>(I)];
    if (ai == 0.0) continue;
    for (std::size_t J = 0; J < right.size(); ++J) {
      const double bj = b.comps()[static_cast<Eigen::Index>(J)];
      if (bj == 0.0) continue;
      std::copy(left[I].indices().begin(), left[I].indices().end(), tuple.begin());
      std::copy(right[J].indices().begin(), right[J].indices().end(), tuple.begin() + p);
      const auto [K, sign] = normalize_tuple(tuple, m);
      if (sign == 0) continue;
      comps[static_cast<Eigen::Index>(rank(K))] += sign * ai * bj;
    }
  }
  return KVector(a.base(), p + q, std::move(comps));
}

KVector lift_kvector(const DifferentiableMap& f, const Vec& x, const KVector& xi) {
  const int n = f.domain_dim();
  const int m = f.codomain_dim();
  const int k = xi.degree();
  if (xi.dim() != n) fail(Errc::dimension_mismatch, "k-vector does not live on the map's domain");
  if (k > n || k > m) {
    fail(Errc::invalid_degree, "degree " + std::to_string(k) + " exceeds a map dimension");
  }
  if (x.size() != n ||
      (xi.base() - x).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
    fail(Errc::invalid_argument, "k-vector is not based at the evaluation point");
  }
  const Mat J = f.jacobian(x);
  return KVector(f(x), k, compound_matrix(J, k) * xi.comps());
}

KVector canonical_field(const Vec& t, int k) {
  const int n = static_cast<int>(t.size());
  if (k < 1 || k > n) {
    fail(Errc::invalid_degree, "canonical field of degree " + std::to_string(k) + " on R^" +
                                   std::to_string(n));
  }
  // (1, ..., k) is rank 0 in lexicographic order
  KVector out = KVector::zero(t, k);
  Vec comps = out.comps();
  comps[0] = 1.0;
  return KVector(t, k, std::move(comps));
}

KVector canonical_lift(const DifferentiableMap& f, const Vec& t) {
  const int k = f.domain_dim();
  if (k < 1 || k > f.codomain_dim()) {
    fail(Errc::invalid_degree, "canonical lift needs 1 <= domain dim <= codomain dim");
  }
  return wedge(f(t), f.jacobian(t));
}

bool degenerate_lift(const Mat& jacobian, const KVector& lift) {
  // every k x k minor is bounded by the product of the column norms
  const double bound = jacobian.colwise().norm().prod();
  return !(lift.max_abs() > 1e-13 * bound);
}

DifferentiableMap CanonicalInclusion::inclusion() const { return maps::inclusion(k, m); }

DifferentiableMap CanonicalInclusion::projection() const { return maps::projection(m, k); }

KVector canonical_section_along_S(const AdaptedChart& chart, const Vec& y) {
  if (chart.k < 1 || chart.k > chart.m) fail(Errc::invalid_degree, "adapted chart degree");
  if (y.size() != chart.m) fail(Errc::dimension_mismatch, "point has wrong dimension");
  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  for (int j = chart.k; j < chart.m; ++j) {
    if (std::abs(y[j]) > chart.tol_surface * scale) {
      fail(Errc::off_submanifold, "coordinate y^" + std::to_string(j + 1) + " = " +
                                      std::to_string(y[j]) + " is not zero");
    }
  }
  Vec base = Vec::Zero(chart.m);
  base.head(chart.k) = y.head(chart.k);
  return KVector::basis(std::move(base), unrank(0, chart.k, chart.m));
}

double plucker_residual(const KVector& xi) {
  if (xi.degree() != 2) {
    fail(Errc::unsupported_degree, "decomposability test only for bivectors");
  }
  // every bivector in dimension <= 3 is decomposable
  if (xi.dim() < 4) return 0.0;
  return wedge(xi, xi).comps().norm();
}

}  // namespace variform
