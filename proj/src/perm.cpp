#include "wreath/perm.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace wreath {

namespace {
std::atomic<int> g_degree_cap{8};
}

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) { g_degree_cap.store(cap); }

void check_degree(int n) {
  if (n > degree_cap())
    throw DegreeCapError("degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap()));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<size_t>(v) - 1])
      throw Error("not a permutation word");
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (size_t i = 0; i < word_.size(); ++i)
    w[static_cast<size_t>(word_[i]) - 1] = static_cast<int>(i) + 1;
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

Permutation Permutation::operator*(const Permutation& t) const {
  if (size() != t.size()) throw Error("size mismatch in permutation product");
  std::vector<int> w(word_.size());
  for (size_t i = 0; i < word_.size(); ++i)
    w[i] = word_[static_cast<size_t>(t.word_[i]) - 1];
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

std::string Permutation::str() const {
  if (word_.empty()) return "e0";
  std::ostringstream os;
  bool wide = size() > 9;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (wide && i) os << '.';
    os << word_[i];
  }
  return os.str();
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw Error("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Composition::partial_sums() const {
  std::vector<int> t;
  int acc = 0;
  for (int x : parts) t.push_back(acc += x);
  return t;
}

std::set<int> Composition::descent_set() const {
  std::set<int> s;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts.size(); ++i) s.insert(acc += parts[i]);
  return s;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

WeakComposition::WeakComposition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 0) throw Error("weak composition parts must be non-negative");
}

int WeakComposition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Composition WeakComposition::positive() const {
  std::vector<int> p;
  for (int x : parts)
    if (x > 0) p.push_back(x);
  return Composition(std::move(p));
}

MarginMatrix::MarginMatrix(std::vector<std::vector<int>> e) : entries(std::move(e)) {
  std::vector<int> rs, cs;
  for (const auto& row : entries) {
    if (row.size() != entries[0].size()) throw Error("ragged margin matrix");
    int acc = 0;
    for (int x : row) {
      if (x < 0) throw Error("negative entry in margin matrix");
      acc += x;
    }
    rs.push_back(acc);
  }
  if (!entries.empty()) {
    cs.assign(entries[0].size(), 0);
    for (const auto& row : entries)
      for (size_t j = 0; j < row.size(); ++j) cs[j] += row[j];
  }
  // Margins of the matrices we build are positive by construction of the
  // enumerations; a zero margin would make Composition throw, which is wanted.
  row_sums = Composition(std::move(rs));
  col_sums = Composition(std::move(cs));
}

Permutation standardize(const std::vector<int>& word) {
  std::vector<size_t> idx(word.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return word[a] < word[b]; });
  std::vector<int> w(word.size());
  for (size_t k = 0; k < idx.size(); ++k) w[idx[k]] = static_cast<int>(k) + 1;
  return Permutation(std::move(w));
}

Composition descent_composition(const Permutation& s) {
  std::vector<int> parts;
  const auto& w = s.word();
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i + 1;
    while (j < w.size() && w[j] > w[j - 1]) ++j;
    parts.push_back(static_cast<int>(j - i));
    i = j;
  }
  return Composition(std::move(parts));
}

std::set<int> descent_set(const Permutation& s) {
  std::set<int> d;
  const auto& w = s.word();
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

bool refines(const Composition& c, const Composition& d) {
  if (c.size() != d.size()) return false;
  auto sc = c.descent_set();
  auto sd = d.descent_set();
  return std::includes(sc.begin(), sc.end(), sd.begin(), sd.end());
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation(w));
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

// Distribute the value set {1..n} over the blocks of c; each block sorted.
void coset_reps_rec(const std::vector<int>& blocks, size_t bi,
                    std::vector<int>& avail, std::vector<int>& word,
                    std::vector<Permutation>& out) {
  if (bi == blocks.size()) {
    out.push_back(Permutation(word));
    return;
  }
  int k = blocks[bi];
  int m = static_cast<int>(avail.size());
  std::vector<int> pick(static_cast<size_t>(k));
  // iterate over k-subsets of avail, in increasing index order
  std::vector<int> comb(static_cast<size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<int> rest;
    for (int i = 0, c = 0; i < m; ++i) {
      if (c < k && comb[static_cast<size_t>(c)] == i) {
        pick[static_cast<size_t>(c)] = avail[static_cast<size_t>(i)];
        ++c;
      } else
        rest.push_back(avail[static_cast<size_t>(i)]);
    }
    size_t base = word.size();
    word.insert(word.end(), pick.begin(), pick.end());
    std::vector<int> saved = avail;
    avail = rest;
    coset_reps_rec(blocks, bi + 1, avail, word, out);
    avail = saved;
    word.resize(base);

    // next combination
    int i = k - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  }
}

} // namespace

std::vector<Permutation> coset_reps(const Composition& c) {
  int n = c.size();
  check_degree(n);
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> word;
  std::vector<Permutation> out;
  coset_reps_rec(c.parts, 0, avail, word, out);
  return out;
}

std::vector<Permutation> coset_reps(const WeakComposition& c) {
  return coset_reps(c.positive());
}

Permutation young_embed(const std::vector<Permutation>& factors) {
  std::vector<int> w;
  int off = 0;
  for (const auto& f : factors) {
    for (int v : f.word()) w.push_back(off + v);
    off += f.size();
  }
  return Permutation(std::move(w));
}

namespace {

void margins_rec(const std::vector<int>& rows, const std::vector<int>& cols,
                 size_t ri, std::vector<int> colrem,
                 std::vector<std::vector<int>>& acc,
                 std::vector<MarginMatrix>& out) {
  if (ri == rows.size()) {
    for (int r : colrem)
      if (r != 0) return;
    out.push_back(MarginMatrix(acc));
    return;
  }
  // enumerate row ri: non-negative entries summing to rows[ri], bounded by colrem
  std::vector<int> row(cols.size(), 0);
  auto rec = [&](auto&& self, size_t j, int rem) -> void {
    if (j + 1 == cols.size()) {
      if (rem > colrem[j]) return;
      row[j] = rem;
      colrem[j] -= rem;
      acc.push_back(row);
      margins_rec(rows, cols, ri + 1, colrem, acc, out);
      acc.pop_back();
      colrem[j] += rem;
      return;
    }
    for (int v = 0; v <= std::min(rem, colrem[j]); ++v) {
      row[j] = v;
      colrem[j] -= v;
      self(self, j + 1, rem - v);
      colrem[j] += v;
    }
  };
  if (cols.empty()) return;
  rec(rec, 0, rows[ri]);
}

} // namespace

std::vector<MarginMatrix> margin_matrices(const Composition& c, const Composition& d) {
  if (c.size() != d.size()) return {};
  std::vector<std::vector<int>> acc;
  std::vector<MarginMatrix> out;
  margins_rec(c.parts, d.parts, 0, d.parts, acc, out);
  return out;
}

WeakComposition colr(const MarginMatrix& m) {
  std::vector<int> parts;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      parts.push_back(m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return WeakComposition(std::move(parts));
}

std::vector<Permutation> double_coset(const MarginMatrix& m) {
  int n = m.row_sums.size();
  check_degree(n);
  auto t = m.row_sums.partial_sums();
  auto u = m.col_sums.partial_sums();
  t.insert(t.begin(), 0);
  u.insert(u.begin(), 0);
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(n)) {
    bool ok = true;
    for (int i = 1; ok && i <= m.rows(); ++i)
      for (int j = 1; ok && j <= m.cols(); ++j) {
        int cnt = 0;
        for (int a = u[static_cast<size_t>(j - 1)] + 1; a <= u[static_cast<size_t>(j)]; ++a) {
          int v = s(a);
          if (v > t[static_cast<size_t>(i - 1)] && v <= t[static_cast<size_t>(i)]) ++cnt;
        }
        if (cnt != m.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

Permutation distinguished_rep(const MarginMatrix& m) {
  int n = m.row_sums.size();
  auto t = m.row_sums.partial_sums();
  auto u = m.col_sums.partial_sums();
  t.insert(t.begin(), 0);
  u.insert(u.begin(), 0);
  std::vector<int> w(static_cast<size_t>(n));
  for (int a = 1; a <= n; ++a) {
    int j = 1;
    while (a > u[static_cast<size_t>(j)]) ++j;
    int i = 1, acc = m.entries[0][static_cast<size_t>(j - 1)];
    while (a - u[static_cast<size_t>(j - 1)] > acc) {
      ++i;
      acc += m.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
    int below_in_col = acc - m.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    int left_in_row = 0;
    for (int jj = 1; jj < j; ++jj)
      left_in_row += m.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(jj - 1)];
    w[static_cast<size_t>(a) - 1] =
        a - (u[static_cast<size_t>(j - 1)] + below_in_col) + (t[static_cast<size_t>(i - 1)] + left_in_row);
  }
  return Permutation(std::move(w));
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back(Composition(std::vector<int>{}));
    return out;
  }
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(Composition(parts));
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      parts.push_back(p);
      self(self, rem - p);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

} // namespace wreath
