#include "wreath/linalg.hpp"

#include <algorithm>

namespace wreath::linalg {

namespace {

void normalize_content(std::vector<Int>& row) {
  Int g = 0;
  for (const Int& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Reduce rows to echelon form (not fully reduced); returns pivot columns.
std::vector<size_t> echelonize(IntRows& rows) {
  std::vector<size_t> pivots;
  size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  size_t rank_row = 0;
  for (size_t col = 0; col < cols && rank_row < rows.size(); ++col) {
    size_t piv = rank_row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank_row], rows[piv]);
    const Int p = rows[rank_row][col];
    for (size_t r = rank_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Int q = rows[r][col];
      for (size_t j = col; j < cols; ++j)
        rows[r][j] = rows[r][j] * p - rows[rank_row][j] * q;
      normalize_content(rows[r]);
    }
    pivots.push_back(col);
    ++rank_row;
  }
  rows.resize(rank_row);
  return pivots;
}

} // namespace

size_t rank(IntRows rows) {
  if (rows.empty()) return 0;
  return echelonize(rows).size();
}

IntRows kernel_basis(const IntRows& rows_in, size_t cols) {
  IntRows rows = rows_in;
  for (auto& r : rows) r.resize(cols, 0);
  auto pivots = echelonize(rows);

  // Back-substitute to reduced echelon form over Q, rows stay integral after
  // rescaling: work with rational rows here, clear denominators at the end.
  std::vector<std::vector<Rat>> rr(rows.size(), std::vector<Rat>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) rr[i][j] = Rat(rows[i][j]);
  for (size_t i = rr.size(); i-- > 0;) {
    size_t pc = pivots[i];
    Rat p = rr[i][pc];
    for (size_t j = pc; j < cols; ++j) rr[i][j] /= p;
    for (size_t k = 0; k < i; ++k) {
      Rat f = rr[k][pc];
      if (f == 0) continue;
      for (size_t j = pc; j < cols; ++j) rr[k][j] -= f * rr[i][j];
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (size_t pc : pivots) is_pivot[pc] = true;

  IntRows kernel;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, 0);
    v[fc] = 1;
    for (size_t i = 0; i < rr.size(); ++i) v[pivots[i]] = -rr[i][fc];
    Int den = 1;
    for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> iv(cols);
    for (size_t j = 0; j < cols; ++j) {
      Rat scaled = v[j] * Rat(den);
      iv[j] = scaled.get_num();
    }
    normalize_content(iv);
    kernel.push_back(std::move(iv));
  }
  return kernel;
}

bool in_row_span(const IntRows& rows, const std::vector<Int>& v) {
  IntRows a = rows;
  size_t base = rank(a);
  a = rows;
  a.push_back(v);
  return rank(a) == base;
}

bool same_row_span(const IntRows& a, const IntRows& b) {
  size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  IntRows joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return rank(joint) == ra;
}

} // namespace wreath::linalg
