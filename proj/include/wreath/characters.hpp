#pragma once

#include "wreath/symfun.hpp"

namespace wreath {

/// Finite abelian group presented as a product of cyclic factors.
/// Elements are mixed-radix indices over the tuple representation.
struct FiniteAbelianGroup {
  std::vector<int> orders;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> r);

  int size() const;
  int exponent() const; // lcm of the orders

  std::vector<int> tuple(int idx) const;
  int index(const std::vector<int>& t) const;
  int add(int a, int b) const;
  int neg(int a) const;

  bool operator==(const FiniteAbelianGroup&) const = default;
};

/// Parse "Z2", "Z3", "Z2xZ2", "Z4", ... into cyclic orders.
FiniteAbelianGroup parse_group(const std::string& name);

/// The dual group as a colour set: characters indexed like group elements,
/// star = inversion.  Index 0 is the trivial character, named "t".
ColourSetPtr dual_colour_set(const FiniteAbelianGroup& g);

/// The group itself as a colour set (for elements of F(ZG)).
ColourSetPtr group_colour_set(const FiniteAbelianGroup& g);

/// Exact element of Z[zeta_e]: integer coefficients on powers of a fixed
/// primitive e-th root of unity, reduced mod zeta^e = 1.  Equality goes
/// through reduction by the cyclotomic polynomial Phi_e.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coef_(1, 0) {}
  explicit Cyclotomic(int order) : order_(order), coef_(static_cast<size_t>(order), 0) {}

  static Cyclotomic zeta_power(int order, long k);
  static Cyclotomic integer(int order, const Int& n);

  int order() const { return order_; }
  const std::vector<Int>& coefficients() const { return coef_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Int& k) const;
  Cyclotomic operator-(const Cyclotomic& o) const;

  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

  /// Integer value when the element is rational; throws otherwise.
  Int as_integer() const;

  std::string str() const;

private:
  int order_;
  std::vector<Int> coef_;
};

/// Cyclotomic polynomial Phi_e as integer coefficients, low degree first.
std::vector<Int> cyclotomic_polynomial(int e);

/// <gamma, g> = zeta_E^{sum_i e_i a_i E/r_i}: the canonical pairing between
/// the dual group and the group, symmetric in its two indices.
Cyclotomic bracket(const FiniteAbelianGroup& g, int char_idx, int elt_idx);

/// Character of G wr S_n induced from eta_{c_1}(gamma_1) (x) ... on the
/// Young subgroup of c.
struct InducedCharacter {
  Composition comp;
  std::vector<int> colours; // character indices

  InducedCharacter() = default;
  InducedCharacter(Composition c, std::vector<int> cols);
};

/// Evaluate the induced character at an element of Z[G wr S_n], extended
/// linearly over the terms of x.  Terms of the wrong degree contribute 0.
Cyclotomic evaluate_induced(const FiniteAbelianGroup& g, const InducedCharacter& chi,
                            const AlgebraElement& x);

/// theta_G on MR(Z Gamma), landing in Lambda(Gamma) through the Frobenius
/// characteristic: expand in MR words, send each to its h-monomial.
SchurExpansion theta_G(const FiniteAbelianGroup& g, const AlgebraElement& x);

/// theta as a word-level h-monomial expansion (no Schur conversion).
HMonomialExpansion theta_G_h(const FiniteAbelianGroup& g, const AlgebraElement& x);

/// Evaluate a virtual character given as a Schur expansion over the dual
/// group at an element of Z[G wr S_n].
Cyclotomic evaluate_schur(const FiniteAbelianGroup& g, const SchurExpansion& chi,
                          const AlgebraElement& x);

/// Both evaluations of the symmetry theorem; y lives over the dual colours,
/// x over the group colours.
std::pair<Cyclotomic, Cyclotomic> symmetry_check(const FiniteAbelianGroup& g,
                                                 const AlgebraElement& y,
                                                 const AlgebraElement& x);

/// Fundamental linear form phi_tot on Lambda(Gamma): picks the coefficients
/// of the trivial characters s_{(n) at colour t}.
Int phi_tot(const SchurExpansion& x);

/// Basis of ker theta_G on the degree-n MR component, as integer elements.
std::vector<AlgebraElement> theta_kernel_basis(const FiniteAbelianGroup& g,
                                               ColourSetPtr gamma_cs, int n);

/// Exact comparison of ker theta_G with MR_n cap MR_n^polar.
bool kernel_equals_pairing_kernel(const FiniteAbelianGroup& g, ColourSetPtr gamma_cs,
                                  int n);

/// A homomorphism G -> G' given by images of elements (validated).
struct GroupHom {
  FiniteAbelianGroup dom, cod;
  std::vector<int> image; // image[a] in cod, indexed by dom element

  GroupHom(FiniteAbelianGroup d, FiniteAbelianGroup c, std::vector<int> img);
};

/// Index map of the dual morphism f^: Gamma' -> Gamma.
std::vector<int> dual_hom(const GroupHom& f);

/// Pull an element of F(Z Gamma') back along f^ (total colourwise relabel).
AlgebraElement functorial_map(const GroupHom& f, const AlgebraElement& x);

} // namespace wreath
