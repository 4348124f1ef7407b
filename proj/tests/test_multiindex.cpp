#include <doctest.h>

#include <variform/multiindex.hpp>

#include "support.hpp"

using namespace variform;

TEST_CASE("binomial and component counts") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(4, 0) == 1);
  CHECK(component_count(0, 3) == 1);
  CHECK(component_count(3, 6) == 20);
}

TEST_CASE("enumerate is lexicographic and rank inverts it") {
  const auto all = enumerate(2, 4);
  REQUIRE(all.size() == 6);
  CHECK(all.front().to_string() == "(1,2)");
  CHECK(all[2].to_string() == "(1,4)");
  CHECK(all.back().to_string() == "(3,4)");
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) {
      const auto idx = enumerate(k, m);
      for (std::size_t r = 0; r < idx.size(); ++r) {
        CHECK(rank(idx[r]) == r);
        CHECK(unrank(r, k, m) == idx[r]);
        if (r > 0) CHECK(idx[r - 1] < idx[r]);
      }
    }
  }
}

TEST_CASE("invalid multi-indices are rejected") {
  CHECK(errc_of([] { MultiIndex({2, 1}, 3); }) == Errc::invalid_index);
  CHECK(errc_of([] { MultiIndex({1, 1}, 3); }) == Errc::invalid_index);
  CHECK(errc_of([] { MultiIndex({0, 2}, 3); }) == Errc::invalid_index);
  CHECK(errc_of([] { MultiIndex({1, 4}, 3); }) == Errc::invalid_index);
  CHECK(errc_of([] { MultiIndex({}, 3); }) == Errc::invalid_degree);
}

TEST_CASE("normalize_tuple reports permutation parity") {
  const int t1[] = {3, 1, 2};
  auto n = normalize_tuple(t1, 4);
  CHECK(n.index.to_string() == "(1,2,3)");
  CHECK(n.sign == 1);

  const int t2[] = {2, 1, 4};
  n = normalize_tuple(t2, 4);
  CHECK(n.index.to_string() == "(1,2,4)");
  CHECK(n.sign == -1);

  const int t3[] = {2, 3, 2};
  CHECK(normalize_tuple(t3, 4).sign == 0);
}
