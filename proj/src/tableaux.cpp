#include "wreath/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace wreath {

Tableau::Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw Error("tableau rows must be non-empty");
    if (i && rows[i].size() > rows[i - 1].size())
      throw Error("tableau row lengths must weakly decrease");
    for (size_t j = 0; j + 1 < rows[i].size(); ++j)
      if (rows[i][j] > rows[i][j + 1]) throw Error("tableau rows must weakly increase");
    if (i)
      for (size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i - 1][j] >= rows[i][j])
          throw Error("tableau columns must strictly increase");
  }
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

int Tableau::box_count() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

std::pair<int, int> Tableau::find(int label) const {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == label) return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

BTableau::BTableau(std::map<int, Tableau> t) : per_colour(std::move(t)) {
  for (auto it = per_colour.begin(); it != per_colour.end();)
    it = it->second.rows.empty() ? per_colour.erase(it) : std::next(it);
}

BPartition BTableau::shape() const {
  std::map<int, std::vector<int>> p;
  for (const auto& [b, t] : per_colour) p[b] = t.shape();
  return BPartition(std::move(p));
}

int BTableau::box_count() const {
  int n = 0;
  for (const auto& [b, t] : per_colour) n += t.box_count();
  return n;
}

bool BTableau::is_standard() const {
  int n = box_count();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (const auto& [b, t] : per_colour)
    for (const auto& row : t.rows)
      for (int v : row) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1]) return false;
        seen[static_cast<size_t>(v) - 1] = true;
      }
  return true;
}

BTableau BTableau::star(const ColourSet& cs) const {
  std::map<int, Tableau> t;
  for (const auto& [b, tab] : per_colour) t[cs.star(b)] = tab;
  return BTableau(std::move(t));
}

int BTableau::colour_of(int label) const {
  for (const auto& [b, t] : per_colour)
    if (t.find(label).first >= 0) return b;
  return -1;
}

namespace {

// Insert x into t by row bumping; returns the (row, col) of the new box.
std::pair<int, int> bump(std::vector<std::vector<int>>& rows, int x) {
  for (size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(i), 0};
    }
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(i), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

} // namespace

std::pair<Tableau, Tableau> rsk_word(const std::vector<int>& w) {
  std::vector<std::vector<int>> p, q;
  for (size_t step = 0; step < w.size(); ++step) {
    auto [r, c] = bump(p, w[step]);
    if (r == static_cast<int>(q.size())) q.push_back({});
    q[static_cast<size_t>(r)].push_back(static_cast<int>(step) + 1);
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

std::pair<BTableau, BTableau> rso(const ColouredPermutation& a) {
  int n = a.degree();
  std::vector<int> sharp = a.sharp_colours();
  std::map<int, Tableau> P, Q;
  std::map<int, std::vector<int>> values, positions;
  for (int j = 1; j <= n; ++j) {
    int b = sharp[static_cast<size_t>(j) - 1];
    values[b].push_back(a.perm(j));
    positions[b].push_back(j);
  }
  for (const auto& [b, vals] : values) {
    auto [p, q] = rsk_word(vals);
    // relabel the record tableau by the actual positions
    for (auto& row : q.rows)
      for (int& v : row) v = positions[b][static_cast<size_t>(v) - 1];
    P[b] = std::move(p);
    Q[b] = Tableau(q.rows);
  }
  return {BTableau(std::move(P)), BTableau(std::move(Q))};
}

namespace {

// Reverse a bump that created a box at the end of row r; returns the value
// that falls out of the top row.
int unbump(std::vector<std::vector<int>>& rows, int r) {
  int x = rows[static_cast<size_t>(r)].back();
  rows[static_cast<size_t>(r)].pop_back();
  if (rows[static_cast<size_t>(r)].empty()) rows.pop_back();
  for (int i = r - 1; i >= 0; --i) {
    auto& row = rows[static_cast<size_t>(i)];
    // rightmost entry strictly smaller than x
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.begin()) throw Error("reverse bump on an invalid tableau pair");
    --it;
    std::swap(*it, x);
  }
  return x;
}

} // namespace

ColouredPermutation rso_inverse(const BTableau& P, const BTableau& Q) {
  if (!(P.shape() == Q.shape())) throw Error("rso_inverse needs equal shapes");
  if (!P.is_standard() || !Q.is_standard()) throw Error("rso_inverse needs standard tableaux");
  int n = P.box_count();
  std::map<int, std::vector<std::vector<int>>> work;
  for (const auto& [b, t] : P.per_colour) work[b] = t.rows;
  std::vector<int> word(static_cast<size_t>(n), 0);   // sigma-values by position
  std::vector<int> sharp(static_cast<size_t>(n), 0);  // colours by position
  // remove labels n, n-1, ..., 1 of Q; label k sits at a corner of its colour
  for (int k = n; k >= 1; --k) {
    int b = Q.colour_of(k);
    if (b < 0) throw Error("record tableau is not standard");
    auto [r, c] = Q.per_colour.at(b).find(k);
    int v = unbump(work[b], r);
    word[static_cast<size_t>(k) - 1] = v;
    sharp[static_cast<size_t>(k) - 1] = b;
  }
  return ColouredPermutation::from_sharp(sharp, Permutation(std::move(word)));
}

bool knuth_related(const ColouredPermutation& a, const ColouredPermutation& b) {
  int n = a.degree();
  if (b.degree() != n || a.colours != b.colours) return false;
  for (int i = 1; i < n; ++i) {
    if (b.perm != a.right_si(i).perm) continue;
    int vi = a.perm(i), vj = a.perm(i + 1);
    if (a.colours[static_cast<size_t>(vi) - 1] != a.colours[static_cast<size_t>(vj) - 1])
      return true;
    int lo = std::min(vi, vj), hi = std::max(vi, vj);
    if (i >= 2) {
      int w = a.perm(i - 1);
      if (w >= lo && w <= hi &&
          a.colours[static_cast<size_t>(w) - 1] == a.colours[static_cast<size_t>(vi) - 1])
        return true;
    }
    if (i + 2 <= n) {
      int w = a.perm(i + 2);
      if (w >= lo && w <= hi &&
          a.colours[static_cast<size_t>(w) - 1] == a.colours[static_cast<size_t>(vi) - 1])
        return true;
    }
  }
  return false;
}

BComposition tableau_descent_composition(const BTableau& T) {
  if (!T.is_standard()) throw Error("descent composition needs a standard B-tableau");
  int n = T.box_count();
  std::vector<int> beta(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) beta[static_cast<size_t>(i) - 1] = T.colour_of(i);
  std::vector<std::pair<int, int>> parts;
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && beta[static_cast<size_t>(j)] == beta[static_cast<size_t>(i)]) ++j;
    // split [i+1, j] where the next label moves to a strictly lower row
    const Tableau& t = T.per_colour.at(beta[static_cast<size_t>(i)]);
    int p = i;
    while (p < j) {
      int q = p + 1;
      while (q < j && t.find(q + 1).first <= t.find(q).first) ++q;
      parts.emplace_back(q - p, beta[static_cast<size_t>(p)]);
      p = q;
    }
    i = j;
  }
  return BComposition(std::move(parts));
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<BPartition> all_bpartitions(const ColourSet& cs, int n) {
  std::vector<BPartition> out;
  std::map<int, std::vector<int>> cur;
  auto rec = [&](auto&& self, int b, int rem) -> void {
    if (b == cs.size()) {
      if (rem == 0) out.push_back(BPartition(cur));
      return;
    }
    for (int k = 0; k <= rem; ++k)
      for (const auto& lambda : partitions_of(k)) {
        if (!lambda.empty()) cur[b] = lambda;
        self(self, b + 1, rem - k);
        cur.erase(b);
      }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<BTableau> standard_btableaux(const BPartition& shape) {
  int n = shape.size();
  std::vector<BTableau> out;
  // grow by placing labels 1..n; a label may extend any colour component at
  // a position keeping rows/columns valid (row lengths weakly decreasing,
  // append-only means entries automatically increase).
  std::map<int, std::vector<std::vector<int>>> cur;
  auto rec = [&](auto&& self, int label) -> void {
    if (label > n) {
      std::map<int, Tableau> t;
      for (const auto& [b, rows] : cur)
        if (!rows.empty()) t[b] = Tableau(rows);
      out.push_back(BTableau(std::move(t)));
      return;
    }
    for (const auto& [b, lambda] : shape.parts) {
      auto& rows = cur[b];
      for (size_t r = 0; r <= rows.size(); ++r) {
        size_t target = r < lambda.size() ? static_cast<size_t>(lambda[r]) : 0;
        size_t len = r < rows.size() ? rows[r].size() : 0;
        if (len >= target) continue;                       // row already full
        if (r > 0 && rows[r - 1].size() <= len) continue;  // keep columns strict
        if (r == rows.size()) rows.push_back({});
        rows[r].push_back(label);
        self(self, label + 1);
        rows[r].pop_back();
        if (rows.back().empty()) rows.pop_back();
      }
      if (rows.empty()) cur.erase(b);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<BTableau> all_standard_btableaux(const ColourSet& cs, int n) {
  std::vector<BTableau> out;
  for (const auto& shape : all_bpartitions(cs, n)) {
    auto ts = standard_btableaux(shape);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement coplactic_element(ColourSetPtr cs, const BTableau& T) {
  if (!T.is_standard()) throw Error("coplactic element needs a standard B-tableau");
  check_degree(T.box_count());
  AlgebraElement out(cs);
  for (const auto& P : standard_btableaux(T.shape())) out.add(rso_inverse(P, T), 1);
  return out;
}

BTableau superstandard_btableau(const ColourSet& cs, const BPartition& shape) {
  std::map<int, Tableau> t;
  int label = 0;
  for (int b = 0; b < cs.size(); ++b) {
    auto it = shape.parts.find(b);
    if (it == shape.parts.end()) continue;
    std::vector<std::vector<int>> rows;
    for (int len : it->second) {
      std::vector<int> row;
      for (int j = 0; j < len; ++j) row.push_back(++label);
      rows.push_back(std::move(row));
    }
    t[b] = Tableau(std::move(rows));
  }
  return BTableau(std::move(t));
}

ColouredPermutation plactic_class_rep(const ColourSet& cs, const BTableau& T) {
  if (!T.is_standard()) throw Error("plactic class rep needs a standard B-tableau");
  return rso_inverse(T, superstandard_btableau(cs, T.shape()));
}

std::map<BTableau, Int> expand_in_coplactic(const AlgebraElement& x) {
  std::map<BTableau, Int> coeffs;
  AlgebraElement residual = x;
  std::set<BTableau> seen;
  for (const auto& [a, k] : x.terms()) {
    BTableau T = rso(a).second;
    if (!seen.insert(T).second) continue;
    coeffs[T] = k;
    residual -= coplactic_element(x.colour_set(), T) * k;
  }
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  if (!residual.is_zero())
    throw NotInSpanError("element is not in the coplactic span", residual);
  return coeffs;
}

} // namespace wreath
