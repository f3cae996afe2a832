#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation would enumerate beyond the configured degree cap.
class DegreeCapError : public Error {
public:
  using Error::Error;
};

int degree_cap();
void set_degree_cap(int cap);
void check_degree(int n);

/// Permutation of {1..n} in one-line notation.  The empty word is the
/// unique permutation of degree 0.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n); // n (n-1) ... 1

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  /// Value at a 1-based position.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  Permutation inverse() const;

  /// Composition as functions: (s*t)(i) = s(t(i)).
  Permutation operator*(const Permutation& t) const;

  auto operator<=>(const Permutation&) const = default;

  std::string str() const;

private:
  std::vector<int> word_;
};

/// Composition of n into positive parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// Partial sums t_1 < t_2 < ... < t_k = n.
  std::vector<int> partial_sums() const;
  /// Proper partial sums {t_1,...,t_{k-1}} as a set.
  std::set<int> descent_set() const;

  auto operator<=>(const Composition&) const = default;
  std::string str() const;
};

/// Composition allowing zero parts.
struct WeakComposition {
  std::vector<int> parts;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> p);

  int size() const;
  /// Drop zero parts.
  Composition positive() const;

  auto operator<=>(const WeakComposition&) const = default;
};

/// Matrix of non-negative integers with cached margins.
struct MarginMatrix {
  std::vector<std::vector<int>> entries; // k rows, l columns
  Composition row_sums;
  Composition col_sums;

  MarginMatrix() = default;
  explicit MarginMatrix(std::vector<std::vector<int>> e);
  MarginMatrix(std::initializer_list<std::vector<int>> init)
      : MarginMatrix(std::vector<std::vector<int>>(init)) {}

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }

  auto operator<=>(const MarginMatrix&) const = default;
};

/// Standardization of a word over a totally ordered alphabet; equal letters
/// are ranked left to right.
Permutation standardize(const std::vector<int>& word);

/// Lengths of the maximal increasing runs of the one-line word.
Composition descent_composition(const Permutation& s);

std::set<int> descent_set(const Permutation& s);

/// True iff c refines d (every partial sum of d is a partial sum of c).
bool refines(const Composition& c, const Composition& d);

std::vector<Permutation> all_permutations(int n);

/// X_c: permutations increasing on each block of c.  Zero parts are skipped.
std::vector<Permutation> coset_reps(const Composition& c);
std::vector<Permutation> coset_reps(const WeakComposition& c);

/// Blockwise product s_1 x ... x s_k with offsets.
Permutation young_embed(const std::vector<Permutation>& factors);

/// All matrices with row-sum c and column-sum d; empty if sizes differ.
std::vector<MarginMatrix> margin_matrices(const Composition& c, const Composition& d);

/// Column-reading composition of M (top to bottom, left to right).
WeakComposition colr(const MarginMatrix& m);

/// The double coset C(M): permutations with the prescribed block incidences.
std::vector<Permutation> double_coset(const MarginMatrix& m);

/// The explicit representative of C(M) lying in C(M) cap X_c^{-1} cap X_d.
Permutation distinguished_rep(const MarginMatrix& m);

/// All compositions of n.
std::vector<Composition> all_compositions(int n);

} // namespace wreath
