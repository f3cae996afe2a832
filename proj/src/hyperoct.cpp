#include "wreath/hyperoct.hpp"

#include <cstdlib>

namespace wreath {

SignedComposition::SignedComposition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x == 0) throw Error("signed composition parts must be non-zero");
}

int SignedComposition::size() const {
  int n = 0;
  for (int x : parts) n += std::abs(x);
  return n;
}

std::vector<SignedComposition> signed_compositions(int n) {
  std::vector<SignedComposition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(SignedComposition(parts));
      return;
    }
    for (int p = 1; p <= rem; ++p)
      for (int sign : {1, -1}) {
        parts.push_back(sign * p);
        self(self, rem - p);
        parts.pop_back();
      }
  };
  rec(rec, n);
  return out;
}

namespace {

void require_two_colour_group(const ColourSetPtr& cs) {
  if (!cs || !cs->has_group() || cs->size() != 2)
    throw Error("hyperoctahedral elements need the two-element group colour set");
}

} // namespace

AlgebraElement z_element(ColourSetPtr cs2, int n) {
  require_two_colour_group(cs2);
  if (n == 0) return AlgebraElement::unit(cs2);
  check_degree(n);
  int s = 1 - cs2->unit(); // the non-trivial colour
  std::vector<int> cols(static_cast<size_t>(n), s);
  return AlgebraElement::basis(std::move(cs2),
                               ColouredPermutation(std::move(cols), Permutation::longest(n)));
}

AlgebraElement xtilde(ColourSetPtr cs2, const SignedComposition& c) {
  require_two_colour_group(cs2);
  int t = cs2->unit();
  AlgebraElement out = AlgebraElement::unit(cs2);
  for (int part : c.parts) {
    AlgebraElement factor(cs2);
    if (part > 0) {
      factor = mr_generator(cs2, part, t);
    } else {
      int n = -part;
      for (int i = 0; i <= n; ++i) {
        AlgebraElement zi = z_element(cs2, i);
        AlgebraElement yt = (n - i == 0) ? AlgebraElement::unit(cs2)
                                         : mr_generator(cs2, n - i, t);
        factor += external_product(zi, yt);
      }
    }
    out = external_product(out, factor);
  }
  return out;
}

SchurExpansion tilde_theta(const FiniteAbelianGroup& z2, const AlgebraElement& x) {
  if (z2.size() != 2) throw Error("tilde_theta needs G = Z/2");
  return omega_on_colour(theta_G(z2, x), 1);
}

Int reflection_subgroup_order(const SignedComposition& c) {
  Int order = 1;
  for (int part : c.parts) {
    int a = std::abs(part);
    for (int i = 2; i <= a; ++i) order *= i;
    if (part > 0)
      for (int i = 0; i < part; ++i) order *= 2;
  }
  return order;
}

Int hyperoctahedral_order(int n) {
  Int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  for (int i = 0; i < n; ++i) order *= 2;
  return order;
}

} // namespace wreath
