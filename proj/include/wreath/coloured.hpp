#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreath/perm.hpp"

namespace wreath {

/// A finite ordered colour set with an involution and an optional group law.
/// Instances are immutable; share them through shared_ptr.
class ColourSet {
public:
  /// Free colour set: identity involution, no group law.
  static std::shared_ptr<const ColourSet> free(std::vector<std::string> names);
  static std::shared_ptr<const ColourSet> with_star(std::vector<std::string> names,
                                                    std::vector<int> star);
  /// Group colour set: the involution is forced to be inversion.
  static std::shared_ptr<const ColourSet> with_group(std::vector<std::string> names,
                                                     std::vector<std::vector<int>> table,
                                                     std::string id = "");
  /// One self-dual colour "e" carrying the trivial group.
  static std::shared_ptr<const ColourSet> trivial();
  /// Colours {t, s} with the Z/2 law (t unit); involution is the identity.
  static std::shared_ptr<const ColourSet> z2();
  /// First k letters a, b, c, ... with identity involution.
  static std::shared_ptr<const ColourSet> letters(int k);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int index(const std::string& name) const; // throws if unknown
  int star(int i) const { return star_[static_cast<size_t>(i)]; }

  bool has_group() const { return !table_.empty(); }
  int mul(int a, int b) const;
  int unit() const;
  int inverse(int a) const;

  /// Registry shorthand used in serialized output ("Z2", "letters:2", ...).
  const std::string& id() const { return id_; }

  bool operator==(const ColourSet& o) const {
    return names_ == o.names_ && star_ == o.star_ && table_ == o.table_;
  }

private:
  ColourSet(std::vector<std::string> names, std::vector<int> star,
            std::vector<std::vector<int>> table, std::string id);

  std::vector<std::string> names_;
  std::vector<int> star_;
  std::vector<std::vector<int>> table_; // empty when no group law
  int unit_ = -1;
  std::string id_;
};

using ColourSetPtr = std::shared_ptr<const ColourSet>;

/// Element (b_1,...,b_n; sigma) of B wr S_n, stored in the pair form
/// (b_1 (x) ... (x) b_n) # sigma.  Colours are indices into a ColourSet.
struct ColouredPermutation {
  std::vector<int> colours;
  Permutation perm;

  ColouredPermutation() = default;
  ColouredPermutation(std::vector<int> c, Permutation p);

  int degree() const { return perm.size(); }

  /// Colour word of the # form sigma . (b'_1,...,b'_n; e_n): b'_j = colours[sigma(j)].
  std::vector<int> sharp_colours() const;
  static ColouredPermutation from_sharp(const std::vector<int>& sharp, Permutation p);

  /// Right multiplication by the transposition s_i (1 <= i < n).
  ColouredPermutation right_si(int i) const;

  bool operator==(const ColouredPermutation&) const = default;

  /// Ordering: degree, then colour word, then permutation word.
  std::strong_ordering operator<=>(const ColouredPermutation& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = colours <=> o.colours; c != 0) return c;
    return perm.word() <=> o.perm.word();
  }
};

/// Sequence ((c_1,b_1),...,(c_k,b_k)) of (positive length, colour) pairs.
struct BComposition {
  std::vector<std::pair<int, int>> parts;

  BComposition() = default;
  explicit BComposition(std::vector<std::pair<int, int>> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  Composition underlying() const;
  /// Colour word: each colour repeated its part's length.
  std::vector<int> expand() const;
  BComposition star(const ColourSet& cs) const;

  auto operator<=>(const BComposition&) const = default;
};

/// Family of partitions indexed by colour; empty partitions are omitted.
struct BPartition {
  std::map<int, std::vector<int>> parts;

  BPartition() = default;
  explicit BPartition(std::map<int, std::vector<int>> p);
  BPartition(std::initializer_list<std::pair<const int, std::vector<int>>> init)
      : BPartition(std::map<int, std::vector<int>>(init)) {}

  int size() const;
  BPartition star(const ColourSet& cs) const;

  auto operator<=>(const BPartition&) const = default;
};

ColouredPermutation star(const ColouredPermutation& a, const ColourSet& cs);

/// Mantaci-Reutenauer descent composition D(alpha).
BComposition descent_composition_B(const ColouredPermutation& a);

/// R(alpha) = D(alpha*)*.
BComposition receding_composition(const ColouredPermutation& a, const ColourSet& cs);

bool atkinson_related(const ColouredPermutation& a, const ColouredPermutation& b);

/// True iff c refines d: underlying compositions refine and colour words agree.
bool refines_B(const BComposition& c, const BComposition& d);

std::vector<ColouredPermutation> all_elements(const ColourSet& cs, int n);

std::vector<BComposition> all_bcompositions(const ColourSet& cs, int n);

/// Canonical element with D(alpha) = c (a fixed representative of the class).
ColouredPermutation descent_class_witness(const BComposition& c);

/// All B-compositions d with d <= c in the refinement order.
std::vector<BComposition> coarsenings(const BComposition& c);

} // namespace wreath
