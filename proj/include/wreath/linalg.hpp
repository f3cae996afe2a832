#pragma once

#include <gmpxx.h>

#include <vector>

namespace wreath {

using Int = mpz_class;
using Rat = mpq_class;

namespace linalg {

using IntRows = std::vector<std::vector<Int>>;

/// Rank over Q of an integer matrix given by rows.  Fraction-free
/// elimination with content normalization; the input is consumed.
size_t rank(IntRows rows);

/// Basis of the right kernel { v : A v = 0 } as primitive integer vectors,
/// one per free column, in column order.
IntRows kernel_basis(const IntRows& rows, size_t cols);

/// True iff v lies in the row span of rows (over Q).
bool in_row_span(const IntRows& rows, const std::vector<Int>& v);

/// True iff the two row spans coincide as subspaces of Q^cols.
bool same_row_span(const IntRows& a, const IntRows& b);

} // namespace linalg

} // namespace wreath
