#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace variform {

/// Strictly increasing tuple of 1-based indices drawn from {1, ..., m}.
///
/// This is the key for every antisymmetric component array in the library:
/// k-vectors and k-forms store one value per MultiIndex, laid out in the
/// lexicographic order produced by enumerate(). rank() is the single source of
/// truth for that layout.
class MultiIndex {
 public:
  /// Throws invalid_index if the entries are out of 1..dim or not strictly
  /// increasing, invalid_degree if the length is not in 1..dim.
  MultiIndex(std::vector<int> indices, int dim);

  int degree() const noexcept { return static_cast<int>(indices_.size()); }
  int dim() const noexcept { return dim_; }
  std::span<const int> indices() const noexcept { return indices_; }
  int operator[](std::size_t a) const { return indices_[a]; }
  bool contains(int index) const noexcept;

  /// "(1,2,3)"
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> indices_;
  int dim_;
};

/// Number of k-subsets of an m-set; 0 when k > m, 1 when k == 0.
std::size_t binomial(int m, int k);

/// Length of the component array of a degree-k object over dimension m.
/// Degree 0 is allowed here (one scalar component).
std::size_t component_count(int k, int m);

/// All C(m,k) strictly increasing k-tuples over 1..m in lexicographic order.
std::vector<MultiIndex> enumerate(int k, int m);

/// Position of `index` in enumerate(index.degree(), index.dim()).
std::size_t rank(const MultiIndex& index);

/// Inverse of rank().
MultiIndex unrank(std::size_t r, int k, int m);

struct NormalizedTuple {
  MultiIndex index;
  int sign;  // -1, 0 or +1; 0 means a repeated entry
};

/// Sorts an arbitrary tuple of 1-based indices and reports the parity of the
/// sorting permutation. A repeated entry yields sign 0 (the returned index is
/// then a valid placeholder, not meaningful).
NormalizedTuple normalize_tuple(std::span<const int> tuple, int dim);

}  // namespace variform
