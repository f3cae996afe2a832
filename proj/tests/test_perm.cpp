#include <doctest.h>

#include <algorithm>
#include <map>

#include "wreath/perm.hpp"

using namespace wreath;

TEST_CASE("standardization") {
  // bcbaba with a < b < c
  CHECK(standardize({2, 3, 2, 1, 2, 1}) == Permutation({3, 6, 4, 1, 5, 2}));
  // weakly increasing words standardize to the identity
  CHECK(standardize({1, 1, 2, 5, 5}) == Permutation::identity(5));
  // cba reverses
  CHECK(standardize({3, 2, 1}) == Permutation({3, 2, 1}));
  CHECK(standardize({}) == Permutation());
}

TEST_CASE("descent compositions") {
  CHECK(descent_composition(Permutation({5, 1, 2, 4, 3})) == Composition({1, 3, 1}));
  CHECK(descent_composition(Permutation::identity(4)) == Composition({4}));
  CHECK(descent_composition(Permutation::longest(4)) == Composition({1, 1, 1, 1}));
}

TEST_CASE("refinement order") {
  Composition c5({5}), c41({4, 1}), c131({1, 3, 1}), c1211({1, 2, 1, 1});
  CHECK(refines(c131, c41));
  CHECK(refines(c41, c5));
  CHECK(refines(c1211, c131));
  CHECK(refines(c131, c131));
  CHECK_FALSE(refines(c41, c131));
  CHECK_FALSE(refines(c41, Composition({1, 3}))); // size mismatch
}

TEST_CASE("coset representatives") {
  auto reps = coset_reps(Composition({2, 2}));
  std::vector<Permutation> expected = {
      Permutation({1, 2, 3, 4}), Permutation({1, 3, 2, 4}), Permutation({1, 4, 2, 3}),
      Permutation({2, 3, 1, 4}), Permutation({2, 4, 1, 3}), Permutation({3, 4, 1, 2})};
  std::sort(reps.begin(), reps.end());
  std::sort(expected.begin(), expected.end());
  CHECK(reps == expected);

  CHECK(coset_reps(Composition({4})) == std::vector<Permutation>{Permutation::identity(4)});
  CHECK(coset_reps(Composition({1, 1, 1})).size() == 6);
  // zero parts are skipped
  CHECK(coset_reps(WeakComposition({0, 2, 0, 2, 0})).size() == 6);
}

TEST_CASE("membership in X_c is descent coarsening") {
  // sigma lies in X_c exactly when c refines D(sigma)
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_compositions(n)) {
      auto reps = coset_reps(c);
      std::set<Permutation> in_xc(reps.begin(), reps.end());
      for (const auto& s : all_permutations(n))
        CHECK(in_xc.count(s) == (refines(c, descent_composition(s)) ? 1u : 0u));
    }
}

TEST_CASE("young embedding") {
  CHECK(young_embed({Permutation({2, 1}), Permutation({1, 2})}) ==
        Permutation({2, 1, 3, 4}));
  CHECK(young_embed({Permutation::identity(2), Permutation::identity(3)}) ==
        Permutation::identity(5));
  CHECK(young_embed({Permutation({2, 1}), Permutation({2, 1})}) ==
        Permutation({2, 1, 4, 3}));
}

TEST_CASE("margin matrices") {
  CHECK(margin_matrices(Composition({1}), Composition({1})) ==
        std::vector<MarginMatrix>{MarginMatrix({{1}})});
  auto m11 = margin_matrices(Composition({1, 1}), Composition({1, 1}));
  CHECK(m11.size() == 2);
  CHECK(std::count(m11.begin(), m11.end(), MarginMatrix({{1, 0}, {0, 1}})) == 1);
  CHECK(std::count(m11.begin(), m11.end(), MarginMatrix({{0, 1}, {1, 0}})) == 1);
  CHECK(margin_matrices(Composition({2, 2}), Composition({2, 2})).size() == 3);
  CHECK(margin_matrices(Composition({2}), Composition({1})).empty());

  // brute-force oracle over all bounded 2x2 grids
  int count = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          if (a + b == 2 && c + d == 2 && a + c == 2 && b + d == 2) ++count;
  CHECK(count == 3);
}

TEST_CASE("column reading") {
  CHECK(colr(MarginMatrix({{1, 0}, {0, 1}})) == WeakComposition({1, 0, 0, 1}));
  CHECK(colr(MarginMatrix({{7}})) == WeakComposition({7}));
  CHECK(colr(MarginMatrix({{1, 2}, {3, 4}})) == WeakComposition({1, 3, 2, 4}));
}

TEST_CASE("double cosets") {
  // a single cell imposes nothing
  CHECK(double_coset(MarginMatrix({{3}})).size() == 6);
  CHECK(double_coset(MarginMatrix({{1, 0}, {0, 1}})) ==
        std::vector<Permutation>{Permutation({1, 2})});
  CHECK(double_coset(MarginMatrix({{0, 1}, {1, 0}})) ==
        std::vector<Permutation>{Permutation({2, 1})});
}

TEST_CASE("distinguished representatives") {
  CHECK(distinguished_rep(MarginMatrix({{4}})) == Permutation::identity(4));
  CHECK(distinguished_rep(MarginMatrix({{1}, {1}})) == Permutation({1, 2}));
  // membership rho in C(M) cap X_d with rho^{-1} in X_c, all margins of size <= 4
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_compositions(n))
      for (const auto& d : all_compositions(n))
        for (const auto& m : margin_matrices(c, d)) {
          auto rho = distinguished_rep(m);
          auto cm = double_coset(m);
          CHECK(std::find(cm.begin(), cm.end(), rho) != cm.end());
          CHECK(refines(d, descent_composition(rho)));
          CHECK(refines(c, descent_composition(rho.inverse())));
        }
}

TEST_CASE("Moebius identity for descent classes") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_compositions(n)) {
      std::map<Permutation, int> lhs, rhs;
      for (const auto& s : all_permutations(n))
        if (descent_composition(s) == c) lhs[s] += 1;
      for (const auto& d : all_compositions(n)) {
        if (!refines(c, d)) continue;
        int sign = ((c.length() - d.length()) % 2 == 0) ? 1 : -1;
        for (const auto& s : coset_reps(d)) {
          rhs[s] += sign;
          if (rhs[s] == 0) rhs.erase(s);
        }
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("coset factorization along a refinement") {
  // X_d x X_f1 x ... x X_fl -> X_c, (rho, s1, .., sl) -> rho (s1 x .. x sl)
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_compositions(n))
      for (const auto& d : all_compositions(n)) {
        if (!refines(c, d)) continue;
        // split c into consecutive factors of sizes d_1, ..., d_l
        std::vector<Composition> fs;
        size_t idx = 0;
        for (int target : d.parts) {
          std::vector<int> f;
          int acc = 0;
          while (acc < target) {
            f.push_back(c.parts[idx]);
            acc += c.parts[idx++];
          }
          REQUIRE(acc == target);
          fs.push_back(Composition(f));
        }
        std::vector<std::vector<Permutation>> factor_reps;
        for (const auto& f : fs) factor_reps.push_back(coset_reps(f));
        std::set<Permutation> image;
        size_t count = 0;
        std::vector<size_t> choice(fs.size(), 0);
        for (const auto& rho : coset_reps(d)) {
          std::fill(choice.begin(), choice.end(), 0);
          while (true) {
            std::vector<Permutation> blocks;
            for (size_t i = 0; i < fs.size(); ++i) blocks.push_back(factor_reps[i][choice[i]]);
            image.insert(rho * young_embed(blocks));
            ++count;
            size_t i = 0;
            while (i < choice.size() && ++choice[i] == factor_reps[i].size())
              choice[i++] = 0;
            if (i == choice.size()) break;
          }
        }
        auto xc = coset_reps(c);
        CHECK(count == xc.size());            // injectivity via counting
        CHECK(image.size() == xc.size());
        CHECK(std::all_of(xc.begin(), xc.end(),
                          [&](const Permutation& s) { return image.count(s) > 0; }));
      }
}

TEST_CASE("degree cap guards enumeration") {
  CHECK_THROWS_AS(all_permutations(degree_cap() + 1), DegreeCapError);
  CHECK_THROWS_AS(coset_reps(Composition({5, 5})), DegreeCapError);
}
