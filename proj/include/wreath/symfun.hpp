#pragma once

#include "wreath/tableaux.hpp"

namespace wreath {

/// Element of Lambda(B) in the Schur basis, indexed by B-partitions.
struct SchurExpansion {
  ColourSetPtr cs;
  std::map<BPartition, Int> coeffs;

  SchurExpansion() = default;
  explicit SchurExpansion(ColourSetPtr c) : cs(std::move(c)) {}

  void add(const BPartition& p, const Int& k);
  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion operator-(const SchurExpansion& o) const;
  SchurExpansion operator*(const Int& k) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const SchurExpansion& o) const { return coeffs == o.coeffs; }

  std::string str() const;
};

/// Commutative monomial in the generators h_n(b): a sorted multiset of
/// (degree, colour) pairs.
using HMonomial = std::vector<std::pair<int, int>>;

struct HMonomialExpansion {
  ColourSetPtr cs;
  std::map<HMonomial, Int> coeffs;

  HMonomialExpansion() = default;
  explicit HMonomialExpansion(ColourSetPtr c) : cs(std::move(c)) {}

  void add(HMonomial m, const Int& k); // sorts the monomial
  HMonomialExpansion& operator+=(const HMonomialExpansion& o);
  bool operator==(const HMonomialExpansion& o) const { return coeffs == o.coeffs; }
};

/// Number of semistandard tableaux of shape lambda and weight mu
/// (mu may contain zeros).  Memoized; thread-safe.
Int kostka(const std::vector<int>& lambda, const std::vector<int>& mu);

SchurExpansion h_to_schur(const HMonomialExpansion& x);

/// Inverse transition; exact since the Kostka matrix is unitriangular.
HMonomialExpansion schur_to_h(const SchurExpansion& x);

/// Product in Lambda(B), routed through the h-monomial basis.
SchurExpansion schur_multiply(const SchurExpansion& a, const SchurExpansion& b);

/// Coproduct of Lambda(B) on a Schur expansion, as a sparse pair map.
std::map<std::pair<BPartition, BPartition>, Int> schur_coproduct(const SchurExpansion& x);

/// Theta_B: t_T -> s_{sh(T)} on the coplactic span; throws NotInSpanError.
SchurExpansion theta_B(const AlgebraElement& x);

/// Bilinear extension of <s_p, s_q> = [q = p*].
Int lambda_pairing(const SchurExpansion& x, const SchurExpansion& y);

/// Conjugate (transpose) the partition attached to one colour in every key.
SchurExpansion omega_on_colour(const SchurExpansion& x, int colour);

std::vector<int> conjugate_partition(const std::vector<int>& lambda);

HMonomialExpansion h_monomial(ColourSetPtr cs, const BComposition& c);

} // namespace wreath
