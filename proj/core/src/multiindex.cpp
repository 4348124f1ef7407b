#include "variform/multiindex.hpp"

#include <algorithm>
#include <numeric>

#include "variform/error.hpp"

namespace variform {

MultiIndex::MultiIndex(std::vector<int> indices, int dim)
    : indices_(std::move(indices)), dim_(dim) {
  const int k = degree();
  if (k < 1 || k > dim_) {
    fail(Errc::invalid_degree, "multi-index of length " + std::to_string(k) +
                                   " over dimension " + std::to_string(dim_));
  }
  for (int a = 0; a < k; ++a) {
    if (indices_[a] < 1 || indices_[a] > dim_) {
      fail(Errc::invalid_index, "entry " + std::to_string(indices_[a]) +
                                    " outside 1.." + std::to_string(dim_));
    }
    if (a > 0 && indices_[a - 1] >= indices_[a]) {
      fail(Errc::invalid_index, "multi-index entries must be strictly increasing");
    }
  }
}

bool MultiIndex::contains(int index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t a = 0; a < indices_.size(); ++a) {
    if (a > 0) s += ',';
    s += std::to_string(indices_[a]);
  }
  return s + ')';
}

std::size_t binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  k = std::min(k, m - k);
  std::size_t c = 1;
  for (int j = 1; j <= k; ++j) {
    c = c * static_cast<std::size_t>(m - k + j) / static_cast<std::size_t>(j);
  }
  return c;
}

std::size_t component_count(int k, int m) {
  if (k < 0 || k > m) {
    fail(Errc::invalid_degree,
         "degree " + std::to_string(k) + " over dimension " + std::to_string(m));
  }
  return binomial(m, k);
}

std::vector<MultiIndex> enumerate(int k, int m) {
  if (k < 1 || k > m) {
    fail(Errc::invalid_degree,
         "cannot enumerate degree " + std::to_string(k) + " over dimension " + std::to_string(m));
  }
  std::vector<MultiIndex> out;
  out.reserve(binomial(m, k));
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.emplace_back(current, m);
    // advance to the next combination in lexicographic order
    int a = k - 1;
    while (a >= 0 && current[a] == m - (k - 1 - a)) --a;
    if (a < 0) break;
    ++current[a];
    for (int b = a + 1; b < k; ++b) current[b] = current[b - 1] + 1;
  }
  return out;
}

std::size_t rank(const MultiIndex& index) {
  const int k = index.degree();
  const int m = index.dim();
  std::size_t r = 0;
  int previous = 0;
  for (int a = 0; a < k; ++a) {
    for (int j = previous + 1; j < index[a]; ++j) {
      r += binomial(m - j, k - a - 1);
    }
    previous = index[a];
  }
  return r;
}

MultiIndex unrank(std::size_t r, int k, int m) {
  if (k < 1 || k > m) {
    fail(Errc::invalid_degree, "unrank degree " + std::to_string(k));
  }
  if (r >= binomial(m, k)) {
    fail(Errc::invalid_index, "rank " + std::to_string(r) + " out of range");
  }
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(k));
  int j = 1;
  for (int a = 0; a < k; ++a) {
    while (true) {
      const std::size_t block = binomial(m - j, k - a - 1);
      if (r < block) break;
      r -= block;
      ++j;
    }
    indices.push_back(j);
    ++j;
  }
  return MultiIndex(std::move(indices), m);
}

NormalizedTuple normalize_tuple(std::span<const int> tuple, int dim) {
  const int k = static_cast<int>(tuple.size());
  if (k < 1) fail(Errc::invalid_degree, "empty index tuple");
  for (int v : tuple) {
    if (v < 1 || v > dim) {
      fail(Errc::invalid_index,
           "entry " + std::to_string(v) + " outside 1.." + std::to_string(dim));
    }
  }

  std::vector<int> sorted(tuple.begin(), tuple.end());
  // insertion sort, counting transpositions for the parity
  int sign = 1;
  for (int a = 1; a < k; ++a) {
    for (int b = a; b > 0 && sorted[b - 1] > sorted[b]; --b) {
      std::swap(sorted[b - 1], sorted[b]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    std::vector<int> placeholder(static_cast<std::size_t>(std::min(k, dim)));
    std::iota(placeholder.begin(), placeholder.end(), 1);
    return {MultiIndex(std::move(placeholder), dim), 0};
  }
  return {MultiIndex(std::move(sorted), dim), sign};
}

}  // namespace variform
