#include <doctest.h>

#include <random>

#include "wreath/characters.hpp"

using namespace wreath;

TEST_CASE("finite abelian groups") {
  FiniteAbelianGroup z6({2, 3});
  CHECK(z6.size() == 6);
  CHECK(z6.exponent() == 6);
  CHECK(z6.add(z6.index({1, 2}), z6.index({1, 1})) == z6.index({0, 0}));
  CHECK(z6.neg(z6.index({1, 2})) == z6.index({1, 1}));
  CHECK(parse_group("Z2xZ2").orders == std::vector<int>{2, 2});
  CHECK(parse_group("Z4").orders == std::vector<int>{4});
  CHECK_THROWS_AS(parse_group("D4"), Error);
}

TEST_CASE("dual colour sets") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  CHECK(gamma->size() == 2);
  CHECK(gamma->name(0) == "t");
  CHECK(gamma->name(1) == "s");
  CHECK(gamma->mul(1, 1) == 0);
  auto g3 = parse_group("Z3");
  auto gamma3 = dual_colour_set(g3);
  CHECK(gamma3->name(0) == "t");
  CHECK(gamma3->mul(1, 2) == 0);
  CHECK(gamma3->star(1) == 2);
}

TEST_CASE("cyclotomic arithmetic") {
  // 1 + zeta_2 = 0
  CHECK((Cyclotomic::integer(2, 1) + Cyclotomic::zeta_power(2, 1)).is_zero());
  // 1 + zeta_3 + zeta_3^2 = 0
  Cyclotomic z3 = Cyclotomic::integer(3, 1) + Cyclotomic::zeta_power(3, 1) +
                  Cyclotomic::zeta_power(3, 2);
  CHECK(z3.is_zero());
  // zeta_4^2 = -1
  CHECK(Cyclotomic::zeta_power(4, 1) * Cyclotomic::zeta_power(4, 1) ==
        Cyclotomic::integer(4, -1));
  CHECK((Cyclotomic::zeta_power(2, 1) * Cyclotomic::zeta_power(2, 1)).as_integer() == 1);
  CHECK_THROWS_AS(Cyclotomic::zeta_power(3, 1).as_integer(), Error);
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
}

TEST_CASE("bracket between the group and its dual") {
  auto g = parse_group("Z2");
  CHECK(bracket(g, 0, 0) == Cyclotomic::integer(2, 1));
  CHECK(bracket(g, 1, 1) == Cyclotomic::integer(2, -1));
  CHECK(bracket(g, 1, 0) == Cyclotomic::integer(2, 1));
  auto g3 = parse_group("Z3");
  CHECK(bracket(g3, 1, 1) == Cyclotomic::zeta_power(3, 1));
  CHECK(bracket(g3, 2, 2) == Cyclotomic::zeta_power(3, 4));
}

TEST_CASE("induced character evaluation") {
  auto g = parse_group("Z2");
  auto gcs = group_colour_set(g);
  // trivial character of the trivial block structure on the unit
  InducedCharacter triv{Composition({1}), {0}};
  AlgebraElement unit1 =
      AlgebraElement::basis(gcs, ColouredPermutation({0}, Permutation({1})));
  CHECK(evaluate_induced(g, triv, unit1) == Cyclotomic::integer(2, 1));

  // the value at the identity is the character degree n!/prod(c_i!)
  for (int n = 1; n <= 4; ++n) {
    ColouredPermutation id(std::vector<int>(static_cast<size_t>(n), 0),
                           Permutation::identity(n));
    AlgebraElement e = AlgebraElement::basis(gcs, id);
    for (const auto& c : all_compositions(n)) {
      std::vector<int> cols(c.parts.size(), 1); // any linear character
      Int dim = 1;
      for (int i = 2; i <= n; ++i) dim *= i;
      for (int p : c.parts)
        for (int i = 2; i <= p; ++i) dim /= i;
      CHECK(evaluate_induced(g, InducedCharacter{c, cols}, e) ==
            Cyclotomic::integer(2, dim));
    }
  }
}

TEST_CASE("theta_G on generators and commutators") {
  auto g = parse_group("Z3");
  auto gamma = dual_colour_set(g);
  for (int n = 1; n <= 3; ++n)
    for (int col = 0; col < 3; ++col) {
      SchurExpansion s = theta_G(g, mr_generator(gamma, n, col));
      CHECK(s.coeffs.size() == 1);
      CHECK(s.coeffs.at(BPartition({{col, {n}}})) == 1);
    }
  // commutators die
  auto y23 = external_product(mr_generator(gamma, 1, 1), mr_generator(gamma, 2, 2));
  auto y32 = external_product(mr_generator(gamma, 2, 2), mr_generator(gamma, 1, 1));
  CHECK(theta_G(g, y23 - y32).is_zero());
  // the degree-n internal unit maps to the trivial character
  SchurExpansion u = theta_G(g, mr_generator(gamma, 3, 0));
  CHECK(u.coeffs.size() == 1);
  CHECK(u.coeffs.at(BPartition({{0, {3}}})) == 1);
  CHECK(phi_tot(u) == 1);
}

TEST_CASE("theta kernel in degree one is trivial") {
  for (const auto& name : {"Z2", "Z3"}) {
    auto g = parse_group(name);
    auto gamma = dual_colour_set(g);
    CHECK(theta_kernel_basis(g, gamma, 1).empty());
    CHECK(kernel_equals_pairing_kernel(g, gamma, 1));
  }
}

TEST_CASE("theta kernel dimensions for Z2 up to degree four") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  for (int n = 1; n <= 4; ++n) {
    CHECK(kernel_equals_pairing_kernel(g, gamma, n));
    long dim_mr = static_cast<long>(all_bcompositions(*gamma, n).size());
    long parts = static_cast<long>(all_bpartitions(*gamma, n).size());
    CHECK(static_cast<long>(theta_kernel_basis(g, gamma, n).size()) == dim_mr - parts);
  }
}

TEST_CASE("Theta_Gamma restricted to MR is the Frobenius image of theta_G") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_bcompositions(*gamma, n)) {
      AlgebraElement x = mr_word(gamma, c);
      CHECK(theta_B(x) == theta_G(g, x));
    }
}

TEST_CASE("the pairing on MR factors through theta_G") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  for (int n = 1; n <= 4; ++n) {
    auto words = all_bcompositions(*gamma, n);
    std::vector<AlgebraElement> elts;
    std::vector<SchurExpansion> images;
    for (const auto& c : words) {
      elts.push_back(mr_word(gamma, c));
      images.push_back(theta_G(g, elts.back()));
    }
    for (size_t i = 0; i < words.size(); ++i)
      for (size_t j = 0; j < words.size(); ++j)
        CHECK(pairing(elts[i], elts[j]) == lambda_pairing(images[i], images[j]));
  }
}

TEST_CASE("theta_G is a bialgebra morphism for the external structure") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  std::mt19937_64 rng(5);
  // multiplicativity on random MR elements with total degree <= 5
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % (5 - n > 2 ? 2 : 5 - n));
    auto pick = [&](int deg) {
      auto words = all_bcompositions(*gamma, deg);
      AlgebraElement x(gamma);
      x += mr_word(gamma, words[rng() % words.size()]) * Int(1 + static_cast<long>(rng() % 2));
      x -= mr_word(gamma, words[rng() % words.size()]) * Int(static_cast<long>(rng() % 2));
      return x;
    };
    AlgebraElement x = pick(n), y = pick(m);
    CHECK(theta_G(g, external_product(x, y)) ==
          schur_multiply(theta_G(g, x), theta_G(g, y)));
  }
  // comultiplicativity on the word basis: group the coproduct by descent
  // compositions, push both sides to pairs of Schur expansions
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_bcompositions(*gamma, n)) {
      AlgebraElement x = mr_word(gamma, c);
      std::map<std::pair<BComposition, BComposition>, Int> grouped;
      for (const auto& [pr, k] : coproduct(x).terms) {
        auto key = std::make_pair(descent_composition_B(pr.first),
                                  descent_composition_B(pr.second));
        grouped[key] = k; // descent classes have disjoint supports
      }
      std::map<std::pair<BPartition, BPartition>, Int> lhs;
      for (const auto& [key, k] : grouped) {
        SchurExpansion l = theta_G(g, descent_class(gamma, key.first));
        SchurExpansion r = theta_G(g, descent_class(gamma, key.second));
        for (const auto& [lp, lk] : l.coeffs)
          for (const auto& [rp, rk] : r.coeffs) {
            auto pkey = std::make_pair(lp, rp);
            Int& slot = lhs[pkey];
            slot += k * lk * rk;
            if (slot == 0) lhs.erase(pkey);
          }
      }
      CHECK(lhs == schur_coproduct(theta_G(g, x)));
    }
}

TEST_CASE("symmetry reduces to the classical one for the trivial group") {
  auto g = parse_group("Z1");
  auto gamma = dual_colour_set(g);
  auto gcs = group_colour_set(g);
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_bcompositions(*gamma, n))
      for (const auto& d : all_bcompositions(*gamma, n)) {
        auto [lhs, rhs] = symmetry_check(g, mr_word(gamma, c), mr_word(gcs, d));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("functoriality of theta") {
  auto z2 = parse_group("Z2");
  auto z4 = parse_group("Z4");
  auto z1 = parse_group("Z1");

  // identity homomorphism acts trivially
  GroupHom ident(z2, z2, {0, 1});
  auto gamma2 = dual_colour_set(z2);
  AlgebraElement x = mr_word(gamma2, BComposition({{1, 1}, {2, 0}}));
  CHECK(functorial_map(ident, x) == x);

  // collapse Z2 -> Z1: every character pulls back to the trivial colour
  GroupHom collapse(z2, z1, {0, 0});
  auto gamma1 = dual_colour_set(z1);
  AlgebraElement y = mr_word(gamma1, BComposition({{2, 0}, {1, 0}}));
  AlgebraElement pulled = functorial_map(collapse, y);
  CHECK(pulled.colour_set()->size() == 2);
  for (const auto& [a, k] : pulled.terms())
    for (int col : a.colours) CHECK(col == 0);
  // theta commutes with the pullback: compare h-expansions after relabel
  for (int n = 1; n <= 3; ++n)
    for (const auto& c : all_bcompositions(*gamma1, n)) {
      AlgebraElement over_g1 = mr_word(gamma1, c);
      HMonomialExpansion lhs = theta_G_h(z2, functorial_map(collapse, over_g1));
      HMonomialExpansion relabelled(dual_colour_set(z2));
      auto dual = dual_hom(collapse);
      for (const auto& [mono, k] : theta_G_h(z1, over_g1).coeffs) {
        HMonomial m;
        for (const auto& [len, col] : mono)
          m.emplace_back(len, dual[static_cast<size_t>(col)]);
        relabelled.add(std::move(m), k);
      }
      CHECK(lhs == relabelled);
    }

  // reduction Z4 -> Z2 embeds the dual of Z2 into the dual of Z4
  GroupHom red(z4, z2, {0, 1, 0, 1});
  auto dual = dual_hom(red);
  CHECK(dual.size() == 2);
  CHECK(dual[0] == 0);
  CHECK(dual[1] == 2); // the sign character of Z2 pulls back to exponent 2 mod 4
  auto gamma4 = dual_colour_set(z4);
  AlgebraElement z = mr_word(dual_colour_set(z2), BComposition({{1, 1}, {1, 0}}));
  AlgebraElement pulled4 = functorial_map(red, z);
  CHECK(pulled4.homogeneous_degree() == z.homogeneous_degree());
  CHECK(pulled4.colour_set()->size() == 4);
  CHECK_THROWS_AS(GroupHom(z2, z2, {1, 0}), Error); // 0 -> 1 breaks additivity
}

TEST_CASE("evaluate_schur matches evaluate_induced on h images") {
  auto g = parse_group("Z2");
  auto gamma = dual_colour_set(g);
  auto gcs = group_colour_set(g);
  for (int n = 1; n <= 3; ++n) {
    auto words = all_bcompositions(*gamma, n);
    for (const auto& c : words) {
      std::vector<int> cols;
      for (const auto& [len, col] : c.parts) cols.push_back(col);
      InducedCharacter chi{c.underlying(), cols};
      SchurExpansion s = theta_G(g, mr_word(gamma, c));
      for (const auto& w : all_elements(*gcs, n)) {
        auto e = AlgebraElement::basis(gcs, w);
        CHECK(evaluate_schur(g, s, e) == evaluate_induced(g, chi, e));
      }
    }
  }
}
