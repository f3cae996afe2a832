#include "wreath/words.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace wreath {

Weight weight_of(const ColouredWord& w) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& x : w) ++m[x];
  return Weight(m.begin(), m.end());
}

void NCSeries::add(const ColouredWord& w, const Int& k) {
  if (k == 0) return;
  Int& slot = coeffs[w];
  slot += k;
  if (slot == 0) coeffs.erase(w);
}

void CSeries::add(const Weight& w, const Int& k) {
  if (k == 0) return;
  Int& slot = coeffs[w];
  slot += k;
  if (slot == 0) coeffs.erase(w);
}

CSeries CSeries::operator-(const CSeries& o) const {
  CSeries r = *this;
  for (const auto& [w, k] : o.coeffs) r.add(w, -k);
  return r;
}

LVectorComposition::LVectorComposition(int l, std::vector<std::vector<int>> columns)
    : cols(std::move(columns)), num_rows(l) {
  for (const auto& col : cols) {
    if (static_cast<int>(col.size()) != l) throw Error("column height mismatch");
    bool nonzero = false;
    for (int v : col) {
      if (v < 0) throw Error("negative entry in l-vector composition");
      if (v > 0) nonzero = true;
    }
    if (!nonzero) throw Error("zero column in l-vector composition");
  }
}

int LVectorComposition::size() const {
  int n = 0;
  for (const auto& col : cols) n += std::accumulate(col.begin(), col.end(), 0);
  return n;
}

ColouredPermutation std_B(const ColouredWord& w) {
  // standardize under the lexicographic order on (letter, colour)
  std::vector<size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return w[a] < w[b]; });
  std::vector<int> word(w.size());
  for (size_t k = 0; k < idx.size(); ++k) word[idx[k]] = static_cast<int>(k) + 1;
  std::vector<int> sharp(w.size());
  for (size_t i = 0; i < w.size(); ++i) sharp[i] = w[i].second;
  return ColouredPermutation::from_sharp(sharp, Permutation(std::move(word)));
}

namespace {

struct FiberKey {
  int colours;
  int degree;
  int alphabet;
  auto operator<=>(const FiberKey&) const = default;
};

std::mutex g_fiber_mutex;
std::map<FiberKey, std::map<ColouredPermutation, std::vector<ColouredWord>>> g_fibers;

const std::map<ColouredPermutation, std::vector<ColouredWord>>& word_fibers(
    const ColourSet& cs, int n, int m) {
  FiberKey key{cs.size(), n, m};
  std::lock_guard<std::mutex> lock(g_fiber_mutex);
  auto it = g_fibers.find(key);
  if (it != g_fibers.end()) return it->second;
  check_degree(n);
  auto& fibers = g_fibers[key];
  // enumerate all (m*|B|)^n words
  ColouredWord w(static_cast<size_t>(n), {1, 0});
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == w.size()) {
      fibers[std_B(w)].push_back(w);
      return;
    }
    for (int a = 1; a <= m; ++a)
      for (int b = 0; b < cs.size(); ++b) {
        w[pos] = {a, b};
        self(self, pos + 1);
      }
  };
  rec(rec, 0);
  return fibers;
}

} // namespace

NCSeries phi_basis(ColourSetPtr cs, const ColouredPermutation& a, int m) {
  NCSeries out;
  out.cs = cs;
  out.degree = a.degree();
  out.alphabet_size = m;
  const auto& fibers = word_fibers(*cs, a.degree(), m);
  auto it = fibers.find(a);
  if (it != fibers.end())
    for (const auto& w : it->second) out.coeffs[w] = 1;
  return out;
}

NCSeries phi(const AlgebraElement& x, int m) {
  auto deg = x.homogeneous_degree();
  if (!deg) throw Error("phi needs a homogeneous element");
  NCSeries out;
  out.cs = x.colour_set();
  out.degree = *deg;
  out.alphabet_size = m;
  for (const auto& [a, k] : x.terms()) {
    NCSeries f = phi_basis(x.colour_set(), a, m);
    for (const auto& [w, c] : f.coeffs) out.add(w, c * k);
  }
  return out;
}

NCSeries nc_multiply(const NCSeries& a, const NCSeries& b) {
  NCSeries out;
  out.cs = a.cs ? a.cs : b.cs;
  out.degree = a.degree + b.degree;
  out.alphabet_size = std::max(a.alphabet_size, b.alphabet_size);
  for (const auto& [wa, ka] : a.coeffs)
    for (const auto& [wb, kb] : b.coeffs) {
      ColouredWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ka * kb);
    }
  return out;
}

CSeries abelianize(const NCSeries& x) {
  CSeries out;
  out.cs = x.cs;
  for (const auto& [w, k] : x.coeffs) out.add(weight_of(w), k);
  return out;
}

CSeries fundamental_F(ColourSetPtr cs, const BComposition& c, int m) {
  CSeries out;
  out.cs = cs;
  int n = c.size();
  std::vector<int> colour_word = c.expand();
  std::set<int> strict; // positions i with a strict letter rise required
  {
    int acc = 0;
    for (size_t i = 0; i + 1 < c.parts.size(); ++i) {
      acc += c.parts[i].first;
      if (c.parts[i].second >= c.parts[i + 1].second) strict.insert(acc);
    }
  }
  if (n == 0) {
    out.add({}, 1);
    return out;
  }
  std::vector<int> letters(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == n) {
      ColouredWord w;
      for (int i = 0; i < n; ++i)
        w.emplace_back(letters[static_cast<size_t>(i)], colour_word[static_cast<size_t>(i)]);
      out.add(weight_of(w), 1);
      return;
    }
    for (int a = lo; a <= m; ++a) {
      letters[static_cast<size_t>(pos)] = a;
      int next_lo = strict.count(pos + 1) ? a + 1 : a;
      self(self, pos + 1, next_lo);
    }
  };
  rec(rec, 0, 1);
  return out;
}

CSeries monomial_M(ColourSetPtr cs, const LVectorComposition& I, int m) {
  CSeries out;
  out.cs = cs;
  int k = I.length();
  if (k == 0) {
    out.add({}, 1);
    return out;
  }
  if (k > m) return out; // no strictly increasing letter choice fits
  std::vector<int> letters(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int j, int lo) -> void {
    if (j == k) {
      std::map<std::pair<int, int>, int> weight;
      for (int col = 0; col < k; ++col)
        for (int row = 0; row < I.num_rows; ++row) {
          int mult = I.cols[static_cast<size_t>(col)][static_cast<size_t>(row)];
          if (mult > 0)
            weight[{letters[static_cast<size_t>(col)], row}] += mult;
        }
      out.add(Weight(weight.begin(), weight.end()), 1);
      return;
    }
    for (int a = lo; a <= m - (k - 1 - j); ++a) {
      letters[static_cast<size_t>(j)] = a;
      self(self, j + 1, a + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

BComposition seqr(const LVectorComposition& I) {
  std::vector<std::pair<int, int>> parts;
  for (const auto& col : I.cols)
    for (int row = 0; row < I.num_rows; ++row) {
      int v = col[static_cast<size_t>(row)];
      if (v > 0) parts.emplace_back(v, row);
    }
  return BComposition(std::move(parts));
}

std::vector<LVectorComposition> all_lvector_compositions(int l, int n, int max_cols) {
  std::vector<LVectorComposition> out;
  std::vector<std::vector<int>> cols;
  std::vector<std::vector<int>> nonzero_columns; // all columns with sum <= n
  // pre-enumerate non-zero columns by total
  std::vector<int> col(static_cast<size_t>(l), 0);
  auto gen = [&](auto&& self, int row, int rem) -> void {
    if (row == l) {
      bool nonzero = false;
      for (int v : col)
        if (v > 0) nonzero = true;
      if (nonzero) nonzero_columns.push_back(col);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      col[static_cast<size_t>(row)] = v;
      self(self, row + 1, rem - v);
      col[static_cast<size_t>(row)] = 0;
    }
  };
  gen(gen, 0, n);
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(LVectorComposition(l, cols));
      return;
    }
    if (static_cast<int>(cols.size()) == max_cols) return;
    for (const auto& candidate : nonzero_columns) {
      int s = std::accumulate(candidate.begin(), candidate.end(), 0);
      if (s > rem) continue;
      cols.push_back(candidate);
      self(self, rem - s);
      cols.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<LVectorComposition> expand_F_in_M(ColourSetPtr cs, const BComposition& c,
                                              int m) {
  std::vector<LVectorComposition> out;
  for (auto& I : all_lvector_compositions(cs->size(), c.size(), m))
    if (refines_B(seqr(I), c)) out.push_back(std::move(I));
  return out;
}

BComposition weight_composition(const Weight& mu) {
  std::vector<std::pair<int, int>> parts;
  for (const auto& [letter, mult] : mu) parts.emplace_back(mult, letter.second);
  return BComposition(std::move(parts));
}

} // namespace wreath
