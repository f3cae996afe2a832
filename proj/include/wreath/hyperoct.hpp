#pragma once

#include "wreath/characters.hpp"

namespace wreath {

/// Signed composition: non-zero parts whose absolute values sum to n.
struct SignedComposition {
  std::vector<int> parts;

  SignedComposition() = default;
  explicit SignedComposition(std::vector<int> p);

  int size() const; // sum of |parts|
  auto operator<=>(const SignedComposition&) const = default;
};

std::vector<SignedComposition> signed_compositions(int n);

/// z_n = (s,...,s).[n (n-1) ... 1]; z_0 is the unit.  The colour set must
/// be a two-element group {t, s}.
AlgebraElement z_element(ColourSetPtr cs2, int n);

/// Bonnafe-Hohlweg element built from the defining relations.
AlgebraElement xtilde(ColourSetPtr cs2, const SignedComposition& c);

/// theta-tilde = (id (x) omega at s) composed with theta_G for G = Z/2.
SchurExpansion tilde_theta(const FiniteAbelianGroup& z2, const AlgebraElement& x);

/// |W_C| = prod |c_i|! * 2^{sum of positive parts}.
Int reflection_subgroup_order(const SignedComposition& c);

/// |W_n| = 2^n n!.
Int hyperoctahedral_order(int n);

} // namespace wreath
