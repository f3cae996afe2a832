#pragma once

#include "wreath/algebra.hpp"

namespace wreath {

/// Word over the truncated alphabet {1..m} x B; letters are (value, colour).
using ColouredWord = std::vector<std::pair<int, int>>;

/// Weight of a coloured word: sorted (letter, multiplicity) pairs.
using Weight = std::vector<std::pair<std::pair<int, int>, int>>;

Weight weight_of(const ColouredWord& w);

/// Truncated non-commutative series, all terms of one length.
struct NCSeries {
  ColourSetPtr cs;
  int degree = 0;
  int alphabet_size = 0;
  std::map<ColouredWord, Int> coeffs;

  void add(const ColouredWord& w, const Int& k);
  bool operator==(const NCSeries& o) const { return coeffs == o.coeffs; }
};

/// Truncated commutative series: coefficients on weights.
struct CSeries {
  ColourSetPtr cs;
  std::map<Weight, Int> coeffs;

  void add(const Weight& w, const Int& k);
  CSeries operator-(const CSeries& o) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const CSeries& o) const { return coeffs == o.coeffs; }
};

/// Matrix of an l-vector composition: l rows, no zero column.
struct LVectorComposition {
  std::vector<std::vector<int>> cols; // each a length-l column
  int num_rows = 0;

  LVectorComposition() = default;
  LVectorComposition(int l, std::vector<std::vector<int>> columns);

  int size() const;
  int length() const { return static_cast<int>(cols.size()); }

  auto operator<=>(const LVectorComposition&) const = default;
};

/// B-standardization: standardize the letters lexicographically, keep the
/// colour word.
ColouredPermutation std_B(const ColouredWord& w);

/// Sum of all length-n words over {1..m} x B whose B-standardization is
/// alpha.  Fibers for a fixed (degree, m) are cached.
NCSeries phi(const AlgebraElement& x, int m);
NCSeries phi_basis(ColourSetPtr cs, const ColouredPermutation& a, int m);

/// Concatenation product of truncated series.
NCSeries nc_multiply(const NCSeries& a, const NCSeries& b);

CSeries abelianize(const NCSeries& x);

/// Poirier fundamental function over the truncated alphabet.
CSeries fundamental_F(ColourSetPtr cs, const BComposition& c, int m);

/// Monomial quasisymmetric function of level |B| over the truncated alphabet.
CSeries monomial_M(ColourSetPtr cs, const LVectorComposition& I, int m);

/// Columnwise reading with zero entries erased.
BComposition seqr(const LVectorComposition& I);

/// All I of the given size with at most max_cols columns.
std::vector<LVectorComposition> all_lvector_compositions(int l, int n, int max_cols);

/// The I appearing in F_c = sum over { I : c is coarsened by seqr(I) } M_I,
/// truncated to at most m columns.
std::vector<LVectorComposition> expand_F_in_M(ColourSetPtr cs, const BComposition& c,
                                              int m);

/// C(mu): the B-composition read off a weight's support in increasing order.
BComposition weight_composition(const Weight& mu);

} // namespace wreath
