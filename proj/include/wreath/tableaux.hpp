#pragma once

#include "wreath/algebra.hpp"

namespace wreath {

/// Semistandard Young tableau over an integer alphabet.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r);
  Tableau(std::initializer_list<std::vector<int>> init)
      : Tableau(std::vector<std::vector<int>>(init)) {}

  std::vector<int> shape() const;
  int box_count() const;
  /// Row and column of a label; (-1,-1) when absent.
  std::pair<int, int> find(int label) const;

  auto operator<=>(const Tableau&) const = default;
};

/// Family of tableaux indexed by colour; empty components are omitted.
struct BTableau {
  std::map<int, Tableau> per_colour;

  BTableau() = default;
  explicit BTableau(std::map<int, Tableau> t);

  BPartition shape() const;
  int box_count() const;
  /// Standard: labels 1..n each appear exactly once across all components.
  bool is_standard() const;
  BTableau star(const ColourSet& cs) const;
  /// Colour of the component containing a label; -1 when absent.
  int colour_of(int label) const;

  auto operator<=>(const BTableau&) const = default;
};

/// Row insertion of a word; returns (insertion tableau, standard record).
std::pair<Tableau, Tableau> rsk_word(const std::vector<int>& w);

/// Colour-separated RSK on w(alpha): P_b inserts the sigma-values at
/// positions coloured b, Q_b records the positions.
std::pair<BTableau, BTableau> rso(const ColouredPermutation& a);

/// Inverse of the RSO correspondence on same-shape standard pairs.
ColouredPermutation rso_inverse(const BTableau& P, const BTableau& Q);

bool knuth_related(const ColouredPermutation& a, const ColouredPermutation& b);

/// Two-level descent composition of a standard B-tableau.
BComposition tableau_descent_composition(const BTableau& T);

/// t_T: sum of all alpha whose record tableau is T.
AlgebraElement coplactic_element(ColourSetPtr cs, const BTableau& T);

/// The alpha with P(alpha) = T and the superstandard record tableau.
ColouredPermutation plactic_class_rep(const ColourSet& cs, const BTableau& T);

/// Row-filled standard tableau family of the given shape, colours in order.
BTableau superstandard_btableau(const ColourSet& cs, const BPartition& shape);

std::vector<std::vector<int>> partitions_of(int n);
std::vector<BPartition> all_bpartitions(const ColourSet& cs, int n);
std::vector<BTableau> standard_btableaux(const BPartition& shape);
std::vector<BTableau> all_standard_btableaux(const ColourSet& cs, int n);

/// Coordinates of x on the coplactic basis {t_T}; throws NotInSpanError.
std::map<BTableau, Int> expand_in_coplactic(const AlgebraElement& x);

} // namespace wreath
