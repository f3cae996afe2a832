#pragma once

#include <map>
#include <optional>
#include <utility>

#include "wreath/coloured.hpp"
#include "wreath/linalg.hpp"

namespace wreath {

/// Sparse integer linear combination of coloured permutations.  Mixed
/// degrees are allowed; zero coefficients are never stored.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(ColourSetPtr cs) : cs_(std::move(cs)) {}

  static AlgebraElement unit(ColourSetPtr cs);
  static AlgebraElement basis(ColourSetPtr cs, ColouredPermutation a);

  const ColourSetPtr& colour_set() const { return cs_; }
  const std::map<ColouredPermutation, Int>& terms() const { return terms_; }

  void add(const ColouredPermutation& a, const Int& k);
  Int coeff(const ColouredPermutation& a) const;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  /// Degree when homogeneous (0 for the zero element), nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Int& k) const; // scalar
  AlgebraElement operator-() const;

  /// Degree-n homogeneous component.
  AlgebraElement component(int n) const;

  bool operator==(const AlgebraElement& o) const;

  std::string str() const;

private:
  void require_same_set(const AlgebraElement& o) const;

  ColourSetPtr cs_;
  std::map<ColouredPermutation, Int> terms_;
};

/// Element of the tensor square, kept as a sparse pair map.
struct TensorElement {
  ColourSetPtr cs;
  std::map<std::pair<ColouredPermutation, ColouredPermutation>, Int> terms;

  void add(const ColouredPermutation& l, const ColouredPermutation& r, const Int& k);
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

/// Shifted-shuffle product on basis terms, extended bilinearly.
AlgebraElement external_product(const AlgebraElement& x, const AlgebraElement& y);

/// Cut-and-standardize coproduct.
TensorElement coproduct(const AlgebraElement& x);

/// Componentwise external product of tensor elements.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

/// l-fold iterated coproduct as a sparse map on l-tuples of basis terms.
std::map<std::vector<ColouredPermutation>, Int> iterated_coproduct(const AlgebraElement& x,
                                                                   int l);

/// Degreewise twisted group-ring product; cross-degree pairs vanish.
/// Requires a group law on the colour set.
AlgebraElement internal_product(const AlgebraElement& x, const AlgebraElement& y);

/// Duality bracket: basis terms pair to 1 exactly against their star.
Int pairing(const AlgebraElement& x, const AlgebraElement& y);

/// Trace form: coefficient mass on terms with identity permutation and all
/// colours equal to the group unit.
Int tau(const AlgebraElement& x);

/// Counit: coefficient of the degree-0 basis term.
Int counit(const AlgebraElement& x);

/// Generator y_{n,b} = (b,...,b; e_n), n >= 1.
AlgebraElement mr_generator(ColourSetPtr cs, int n, int colour);

/// Word y_{c_1,b_1} * ... * y_{c_k,b_k} computed in closed form.
AlgebraElement mr_word(ColourSetPtr cs, const BComposition& c);

/// Sum of all alpha with D(alpha) = c.
AlgebraElement descent_class(ColourSetPtr cs, const BComposition& c);

/// Coordinates in the descent-class basis.
struct MRExpansion {
  std::map<BComposition, Int> coeffs;
};

class NotInSpanError : public Error {
public:
  NotInSpanError(std::string what, AlgebraElement residual)
      : Error(std::move(what)), residual(std::move(residual)) {}
  AlgebraElement residual;
};

/// Expand a homogeneous element in descent classes; throws NotInSpanError
/// (with the residual) when the element is outside the span.
MRExpansion expand_in_mr_basis(const AlgebraElement& x);

/// Coordinates on the word basis y_{c_1,b_1}*...*y_{c_k,b_k}, obtained from
/// the descent-class expansion by Moebius inversion along refinement.
std::map<BComposition, Int> expand_in_mr_words(const AlgebraElement& x);

/// Internal product of two word-basis elements by the margin-matrix rule,
/// with factors read column by column.
AlgebraElement mr_internal_rule(ColourSetPtr cs, const BComposition& c,
                                const BComposition& d);

/// Basis of the polar of the span within degree n, as integer elements.
std::vector<AlgebraElement> orthogonal_complement(const std::vector<AlgebraElement>& span,
                                                  ColourSetPtr cs, int n);

/// Coordinate vector of the degree-n component on the full basis enumeration.
std::vector<Int> coordinates(const AlgebraElement& x,
                             const std::vector<ColouredPermutation>& basis);

AlgebraElement from_coordinates(ColourSetPtr cs, const std::vector<Int>& coords,
                                const std::vector<ColouredPermutation>& basis);

} // namespace wreath
