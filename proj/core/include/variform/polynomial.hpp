#pragma once

#include <string>
#include <vector>

#include "variform/types.hpp"

namespace variform {

struct Monomial {
  double coef = 0.0;
  std::vector<int> exponents;  // one non-negative exponent per variable
};

/// Real polynomial in a fixed number of variables, kept as a list of monomials.
/// Used for scenario-declarable coefficient fields and catalog maps because it
/// differentiates exactly.
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0, std::vector<Monomial> terms = {});

  static Polynomial constant(int num_vars, double value);
  /// The coordinate function t^var (var is 0-based).
  static Polynomial coordinate(int num_vars, int var);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  int total_degree() const;

  double operator()(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  Polynomial derivative(int var) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(double s) const;

 private:
  int num_vars_;
  std::vector<Monomial> terms_;
};

}  // namespace variform
