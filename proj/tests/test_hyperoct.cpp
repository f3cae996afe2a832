#include <doctest.h>

#include "wreath/hyperoct.hpp"

using namespace wreath;

namespace {
const auto g2 = parse_group("Z2");
const auto gamma = dual_colour_set(g2);
} // namespace

TEST_CASE("signed compositions") {
  CHECK(signed_compositions(1).size() == 2);
  CHECK(signed_compositions(2).size() == 6);
  CHECK(signed_compositions(3).size() == 18);
  CHECK(signed_compositions(5).size() == 162); // 2 * 3^(n-1)
  CHECK_THROWS_AS(SignedComposition({1, 0}), Error);
  CHECK(SignedComposition({-2, 3}).size() == 5);
}

TEST_CASE("z elements") {
  CHECK(z_element(gamma, 0) == AlgebraElement::unit(gamma));
  AlgebraElement z1 = z_element(gamma, 1);
  CHECK(z1 == AlgebraElement::basis(gamma, ColouredPermutation({1}, Permutation({1}))));
  AlgebraElement z3 = z_element(gamma, 3);
  CHECK(z3.term_count() == 1);
  CHECK(z3.coeff(ColouredPermutation({1, 1, 1}, Permutation({3, 2, 1}))) == 1);
}

TEST_CASE("xtilde relations in small degree") {
  CHECK(xtilde(gamma, SignedComposition({3})) == mr_generator(gamma, 3, 0));
  AlgebraElement xm1 = xtilde(gamma, SignedComposition({-1}));
  AlgebraElement expect(gamma);
  expect.add(ColouredPermutation({0}, Permutation({1})), 1);
  expect.add(ColouredPermutation({1}, Permutation({1})), 1);
  CHECK(xm1 == expect);
  // products build the general element
  CHECK(xtilde(gamma, SignedComposition({1, -1})) ==
        external_product(xtilde(gamma, SignedComposition({1})),
                         xtilde(gamma, SignedComposition({-1}))));
}

TEST_CASE("subgroup orders") {
  CHECK(hyperoctahedral_order(2) == 8);
  CHECK(hyperoctahedral_order(3) == 48);
  CHECK(reflection_subgroup_order(SignedComposition({-2})) == 2);  // S_2
  CHECK(reflection_subgroup_order(SignedComposition({2})) == 8);   // W_2
  CHECK(reflection_subgroup_order(SignedComposition({1, -1})) == 2);
}

TEST_CASE("tilde theta on generators") {
  CHECK(tilde_theta(g2, mr_generator(gamma, 2, 1)).coeffs.count(
            BPartition({{1, {1, 1}}})) == 1);
  CHECK(tilde_theta(g2, mr_generator(gamma, 2, 0)) == theta_G(g2, mr_generator(gamma, 2, 0)));
  // x~_(-n) maps to the full induced character eta_n(t+s)
  for (int n = 1; n <= 3; ++n) {
    SchurExpansion got = tilde_theta(g2, xtilde(gamma, SignedComposition({-n})));
    HMonomialExpansion h(gamma);
    for (int i = 0; i <= n; ++i) {
      HMonomial m;
      if (i > 0) m.emplace_back(i, 0);
      if (n - i > 0) m.emplace_back(n - i, 1);
      h.add(std::move(m), 1);
    }
    CHECK(got == h_to_schur(h));
  }
}
