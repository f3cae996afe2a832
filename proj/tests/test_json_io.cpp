#include <doctest.h>

#include "wreath/json_io.hpp"

using namespace wreath;

TEST_CASE("element round trips") {
  auto cs = ColourSet::z2();
  AlgebraElement x(cs);
  x.add(ColouredPermutation({0, 1}, Permutation({2, 1})), 3);
  x.add(ColouredPermutation({1, 1}, Permutation({1, 2})), -2);
  json j = to_json(x);
  CHECK(j.at("colour_set") == "Z2");
  AlgebraElement back = algebra_element_from_json(j);
  CHECK(back == x);
  CHECK(*back.colour_set() == *cs);
}

TEST_CASE("colour set round trips") {
  // inline free set with a swap involution
  json j = {{"colours", {"a", "b"}}, {"star", {{"a", "b"}, {"b", "a"}}}};
  auto cs = colour_set_from_json(j);
  CHECK(cs->star(0) == 1);
  json back = to_json(*cs);
  auto cs2 = colour_set_from_json(back);
  CHECK(*cs == *cs2);

  // shorthand strings
  CHECK(colour_set_from_json(json("Z3"))->size() == 3);
  CHECK(colour_set_from_json(json("grp:Z2"))->size() == 2);
  CHECK(colour_set_from_json(json("letters:3"))->size() == 3);
  CHECK(colour_set_from_json(json("trivial"))->has_group());

  // Cayley tables round trip with the inversion star enforced
  json cycle = to_json(*dual_colour_set(parse_group("Z3")));
  auto z3 = colour_set_from_json(cycle);
  CHECK(z3->mul(1, 2) == 0);
  CHECK(z3->star(1) == 2);
}

TEST_CASE("big coefficients serialize as strings") {
  auto cs = ColourSet::trivial();
  AlgebraElement x(cs);
  Int big("123456789012345678901234567890");
  x.add(ColouredPermutation({0}, Permutation({1})), big);
  json j = to_json(x);
  CHECK(j.at("terms").at(0).at("coeff").is_string());
  CHECK(algebra_element_from_json(j) == x);
}

TEST_CASE("tableaux, compositions, groups") {
  auto cs = ColourSet::letters(2);
  BTableau T({{0, Tableau({{1, 2, 5}, {3}})}, {1, Tableau({{4, 7}, {6}})}});
  json j = to_json(T, *cs);
  CHECK(btableau_from_json(j, *cs) == T);

  BComposition c({{2, 0}, {1, 1}});
  CHECK(bcomposition_from_json(to_json(c, *cs), *cs) == c);

  SignedComposition sc({-1, 2});
  CHECK(signed_composition_from_json(to_json(sc)) == sc);

  FiniteAbelianGroup g({2, 3});
  CHECK(group_from_json(to_json(g)) == g);
  CHECK(group_from_json(json("Z2xZ3")) == g);

  MarginMatrix m({{1, 0}, {0, 1}});
  CHECK(margin_matrix_from_json(to_json(m)) == m);
}

TEST_CASE("serialized term order is degree, colours, permutation") {
  auto cs = ColourSet::letters(2);
  AlgebraElement x(cs);
  x.add(ColouredPermutation({1, 0}, Permutation({1, 2})), 1);
  x.add(ColouredPermutation({0}, Permutation({1})), 1);
  x.add(ColouredPermutation({0, 0}, Permutation({2, 1})), 1);
  x.add(ColouredPermutation({0, 0}, Permutation({1, 2})), 1);
  json j = to_json(x);
  REQUIRE(j.at("terms").size() == 4);
  CHECK(j.at("terms").at(0).at("perm") == json({1}));
  CHECK(j.at("terms").at(1).at("perm") == json({1, 2}));
  CHECK(j.at("terms").at(1).at("colours") == json({"a", "a"}));
  CHECK(j.at("terms").at(2).at("perm") == json({2, 1}));
  CHECK(j.at("terms").at(3).at("colours") == json({"b", "a"}));
}

TEST_CASE("schur and series serialization") {
  auto cs = ColourSet::z2();
  SchurExpansion s(cs);
  s.add(BPartition({{0, {2, 1}}, {1, {1}}}), 2);
  json j = to_json(s);
  CHECK(j.at(0).at("bpartition").at("t") == json({2, 1}));
  CHECK(j.at(0).at("coeff") == 2);

  CSeries c;
  c.cs = cs;
  c.add({{{1, 0}, 2}}, 1);
  json jc = to_json(c);
  CHECK(jc.at(0).at("weight").at(0).at("letter") == 1);
  CHECK(jc.at(0).at("weight").at(0).at("colour") == "t");
  CHECK(jc.at(0).at("weight").at(0).at("mult") == 2);
}
