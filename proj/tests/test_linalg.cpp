#include <doctest.h>

#include "wreath/linalg.hpp"

using namespace wreath;
using linalg::IntRows;

TEST_CASE("rank") {
  CHECK(linalg::rank({}) == 0);
  CHECK(linalg::rank({{0, 0}, {0, 0}}) == 0);
  CHECK(linalg::rank({{1, 2}, {2, 4}}) == 1);
  CHECK(linalg::rank({{1, 2}, {2, 5}}) == 2);
  CHECK(linalg::rank({{2, 0, 4}, {0, 3, 0}, {2, 3, 4}}) == 2);
}

TEST_CASE("kernel basis") {
  // x + y + z = 0 has a 2-dimensional kernel
  auto k = linalg::kernel_basis({{1, 1, 1}}, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
  // full-rank square system has none
  CHECK(linalg::kernel_basis({{1, 0}, {0, 1}}, 2).empty());
  // kernel vectors are primitive integer vectors
  auto k2 = linalg::kernel_basis({{2, 4}}, 2);
  REQUIRE(k2.size() == 1);
  Int g;
  mpz_gcd(g.get_mpz_t(), k2[0][0].get_mpz_t(), k2[0][1].get_mpz_t());
  CHECK(g == 1);
}

TEST_CASE("span membership") {
  IntRows rows = {{1, 0, 1}, {0, 1, 1}};
  CHECK(linalg::in_row_span(rows, {1, 1, 2}));
  CHECK(linalg::in_row_span(rows, {2, -3, -1}));
  CHECK_FALSE(linalg::in_row_span(rows, {0, 0, 1}));
  CHECK(linalg::same_row_span(rows, {{1, 1, 2}, {1, -1, 0}}));
  CHECK_FALSE(linalg::same_row_span(rows, {{1, 0, 1}}));
}

TEST_CASE("kernel of a rectangular matrix annihilates the rows") {
  IntRows rows = {{3, 1, 0, 2}, {0, 2, 1, 1}, {3, 3, 1, 3}};
  auto kernel = linalg::kernel_basis(rows, 4);
  CHECK(kernel.size() == 2); // rank is 2
  for (const auto& v : kernel)
    for (const auto& r : rows) {
      Int dot = 0;
      for (size_t i = 0; i < 4; ++i) dot += r[i] * v[i];
      CHECK(dot == 0);
    }
}
