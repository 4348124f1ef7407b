#include "variform/types.hpp"

#include <string>

#include "variform/error.hpp"

namespace variform {

Box::Box(Vec lower, Vec upper) : lo(std::move(lower)), hi(std::move(upper)) {
  if (lo.size() != hi.size()) {
    fail(Errc::dimension_mismatch, "box bounds have different lengths");
  }
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= hi[i])) {
      fail(Errc::invalid_argument, "box bound lo > hi on axis " + std::to_string(i));
    }
  }
}

Box Box::interval(double a, double b) {
  Vec lo(1), hi(1);
  lo << a;
  hi << b;
  return Box(std::move(lo), std::move(hi));
}

Box Box::unit(int dim) { return Box(Vec::Zero(dim), Vec::Ones(dim)); }

double Box::volume() const { return (hi - lo).prod(); }

bool Box::contains(const Vec& t, double tol) const {
  if (t.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (t[i] < lo[i] - tol || t[i] > hi[i] + tol) return false;
  }
  return true;
}

}  // namespace variform
