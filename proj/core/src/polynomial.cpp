#include "variform/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "variform/error.hpp"

namespace variform {

Polynomial::Polynomial(int num_vars, std::vector<Monomial> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  if (num_vars_ < 0) fail(Errc::invalid_argument, "negative variable count");
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != num_vars_) {
      fail(Errc::dimension_mismatch, "monomial exponent count does not match variable count");
    }
    if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; })) {
      fail(Errc::invalid_argument, "negative exponent in monomial");
    }
  }
}

Polynomial Polynomial::constant(int num_vars, double value) {
  return Polynomial(num_vars, {Monomial{value, std::vector<int>(num_vars, 0)}});
}

Polynomial Polynomial::coordinate(int num_vars, int var) {
  std::vector<int> e(num_vars, 0);
  e.at(var) = 1;
  return Polynomial(num_vars, {Monomial{1.0, std::move(e)}});
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

double Polynomial::operator()(const Vec& x) const {
  if (x.size() != num_vars_) fail(Errc::dimension_mismatch, "polynomial argument length");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double p = t.coef;
    for (int v = 0; v < num_vars_; ++v) {
      for (int e = 0; e < t.exponents[v]; ++e) p *= x[v];
    }
    sum += p;
  }
  return sum;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= num_vars_) fail(Errc::invalid_index, "derivative variable");
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Monomial d = t;
    d.coef *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(num_vars_, std::move(out));
}

Vec Polynomial::gradient(const Vec& x) const {
  Vec g(num_vars_);
  for (int v = 0; v < num_vars_; ++v) g[v] = derivative(v)(x);
  return g;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) fail(Errc::dimension_mismatch, "polynomial sum");
  std::vector<Monomial> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(num_vars_, std::move(t));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<Monomial> t = terms_;
  for (auto& m : t) m.coef *= s;
  return Polynomial(num_vars_, std::move(t));
}

}  // namespace variform
