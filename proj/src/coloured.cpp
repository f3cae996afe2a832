#include "wreath/coloured.hpp"

#include <algorithm>
#include <numeric>

namespace wreath {

ColourSet::ColourSet(std::vector<std::string> names, std::vector<int> star,
                     std::vector<std::vector<int>> table, std::string id)
    : names_(std::move(names)), star_(std::move(star)), table_(std::move(table)),
      id_(std::move(id)) {
  int k = size();
  if (k == 0) throw Error("colour set must be non-empty");
  if (static_cast<int>(star_.size()) != k) throw Error("involution size mismatch");
  for (int i = 0; i < k; ++i) {
    int s = star_[static_cast<size_t>(i)];
    if (s < 0 || s >= k || star_[static_cast<size_t>(s)] != i)
      throw Error("colour involution is not involutive");
  }
  if (!table_.empty()) {
    if (static_cast<int>(table_.size()) != k) throw Error("Cayley table size mismatch");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != k) throw Error("Cayley table size mismatch");
      for (int v : row)
        if (v < 0 || v >= k) throw Error("Cayley table entry out of range");
    }
    for (int e = 0; e < k; ++e) {
      bool left = true, right = true;
      for (int a = 0; a < k; ++a) {
        if (table_[static_cast<size_t>(e)][static_cast<size_t>(a)] != a) left = false;
        if (table_[static_cast<size_t>(a)][static_cast<size_t>(e)] != a) right = false;
      }
      if (left && right) {
        unit_ = e;
        break;
      }
    }
    if (unit_ < 0) throw Error("Cayley table has no two-sided unit");
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("Cayley table is not associative");
    for (int a = 0; a < k; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < k; ++b)
        if (mul(a, b) == unit_ && mul(b, a) == unit_) {
          has_inverse = true;
          if (star_[static_cast<size_t>(a)] != b)
            throw Error("involution must be inversion when a group law is present");
        }
      if (!has_inverse) throw Error("Cayley table element without inverse");
    }
  }
}

std::shared_ptr<const ColourSet> ColourSet::free(std::vector<std::string> names) {
  std::vector<int> star(names.size());
  std::iota(star.begin(), star.end(), 0);
  return std::shared_ptr<const ColourSet>(
      new ColourSet(std::move(names), std::move(star), {}, ""));
}

std::shared_ptr<const ColourSet> ColourSet::with_star(std::vector<std::string> names,
                                                      std::vector<int> star) {
  return std::shared_ptr<const ColourSet>(
      new ColourSet(std::move(names), std::move(star), {}, ""));
}

std::shared_ptr<const ColourSet> ColourSet::with_group(std::vector<std::string> names,
                                                       std::vector<std::vector<int>> table,
                                                       std::string id) {
  int k = static_cast<int>(names.size());
  std::vector<int> star(static_cast<size_t>(k), -1);
  // find the unit, then inverses
  int unit = -1;
  for (int e = 0; e < k && unit < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < k; ++a)
      if (table[static_cast<size_t>(e)][static_cast<size_t>(a)] != a ||
          table[static_cast<size_t>(a)][static_cast<size_t>(e)] != a)
        ok = false;
    if (ok) unit = e;
  }
  if (unit < 0) throw Error("Cayley table has no two-sided unit");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == unit &&
          table[static_cast<size_t>(b)][static_cast<size_t>(a)] == unit)
        star[static_cast<size_t>(a)] = b;
  return std::shared_ptr<const ColourSet>(
      new ColourSet(std::move(names), std::move(star), std::move(table), std::move(id)));
}

std::shared_ptr<const ColourSet> ColourSet::trivial() {
  return with_group({"e"}, {{0}}, "trivial");
}

std::shared_ptr<const ColourSet> ColourSet::z2() {
  return with_group({"t", "s"}, {{0, 1}, {1, 0}}, "Z2");
}

std::shared_ptr<const ColourSet> ColourSet::letters(int k) {
  if (k < 1 || k > 26) throw Error("letters(k) needs 1 <= k <= 26");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<int> star(names.size());
  std::iota(star.begin(), star.end(), 0);
  return std::shared_ptr<const ColourSet>(new ColourSet(
      std::move(names), std::move(star), {}, "letters:" + std::to_string(k)));
}

int ColourSet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  throw Error("unknown colour: " + name);
}

int ColourSet::mul(int a, int b) const {
  if (!has_group()) throw Error("colour set has no group law");
  return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

int ColourSet::unit() const {
  if (!has_group()) throw Error("colour set has no group law");
  return unit_;
}

int ColourSet::inverse(int a) const {
  if (!has_group()) throw Error("colour set has no group law");
  return star_[static_cast<size_t>(a)];
}

ColouredPermutation::ColouredPermutation(std::vector<int> c, Permutation p)
    : colours(std::move(c)), perm(std::move(p)) {
  if (static_cast<int>(colours.size()) != perm.size())
    throw Error("colour vector and permutation size differ");
}

std::vector<int> ColouredPermutation::sharp_colours() const {
  std::vector<int> b(colours.size());
  for (int j = 1; j <= degree(); ++j)
    b[static_cast<size_t>(j) - 1] = colours[static_cast<size_t>(perm(j)) - 1];
  return b;
}

ColouredPermutation ColouredPermutation::from_sharp(const std::vector<int>& sharp,
                                                    Permutation p) {
  Permutation inv = p.inverse();
  std::vector<int> c(sharp.size());
  for (int i = 1; i <= p.size(); ++i)
    c[static_cast<size_t>(i) - 1] = sharp[static_cast<size_t>(inv(i)) - 1];
  return ColouredPermutation(std::move(c), std::move(p));
}

ColouredPermutation ColouredPermutation::right_si(int i) const {
  std::vector<int> w = perm.word();
  std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(i)]);
  return ColouredPermutation(colours, Permutation(std::move(w)));
}

BComposition::BComposition(std::vector<std::pair<int, int>> p) : parts(std::move(p)) {
  for (const auto& [c, b] : parts)
    if (c < 1) throw Error("B-composition parts must be positive");
}

int BComposition::size() const {
  int n = 0;
  for (const auto& [c, b] : parts) n += c;
  return n;
}

Composition BComposition::underlying() const {
  std::vector<int> p;
  for (const auto& [c, b] : parts) p.push_back(c);
  return Composition(std::move(p));
}

std::vector<int> BComposition::expand() const {
  std::vector<int> w;
  for (const auto& [c, b] : parts) w.insert(w.end(), static_cast<size_t>(c), b);
  return w;
}

BComposition BComposition::star(const ColourSet& cs) const {
  std::vector<std::pair<int, int>> p;
  for (const auto& [c, b] : parts) p.emplace_back(c, cs.star(b));
  return BComposition(std::move(p));
}

BPartition::BPartition(std::map<int, std::vector<int>> p) : parts(std::move(p)) {
  for (auto it = parts.begin(); it != parts.end();) {
    const auto& lambda = it->second;
    for (size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] < 1) throw Error("partition parts must be positive");
      if (i && lambda[i] > lambda[i - 1]) throw Error("partition must weakly decrease");
    }
    it = lambda.empty() ? parts.erase(it) : std::next(it);
  }
}

int BPartition::size() const {
  int n = 0;
  for (const auto& [b, lambda] : parts)
    n += std::accumulate(lambda.begin(), lambda.end(), 0);
  return n;
}

BPartition BPartition::star(const ColourSet& cs) const {
  std::map<int, std::vector<int>> p;
  for (const auto& [b, lambda] : parts) p[cs.star(b)] = lambda;
  return BPartition(std::move(p));
}

ColouredPermutation star(const ColouredPermutation& a, const ColourSet& cs) {
  int n = a.degree();
  std::vector<int> c(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    c[static_cast<size_t>(i) - 1] = cs.star(a.colours[static_cast<size_t>(a.perm(i)) - 1]);
  return ColouredPermutation(std::move(c), a.perm.inverse());
}

BComposition descent_composition_B(const ColouredPermutation& a) {
  int n = a.degree();
  std::vector<int> b = a.sharp_colours();
  std::vector<std::pair<int, int>> parts;
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && b[static_cast<size_t>(j)] == b[static_cast<size_t>(i)]) ++j;
    // maximal sigma-increasing runs inside the colour block [i+1, j]
    int p = i;
    while (p < j) {
      int q = p + 1;
      while (q < j && a.perm(q + 1) > a.perm(q)) ++q;
      parts.emplace_back(q - p, b[static_cast<size_t>(p)]);
      p = q;
    }
    i = j;
  }
  return BComposition(std::move(parts));
}

BComposition receding_composition(const ColouredPermutation& a, const ColourSet& cs) {
  return descent_composition_B(star(a, cs)).star(cs);
}

bool atkinson_related(const ColouredPermutation& a, const ColouredPermutation& b) {
  int n = a.degree();
  if (b.degree() != n || a.colours != b.colours) return false;
  for (int i = 1; i < n; ++i) {
    if (b.perm != (a.right_si(i).perm)) continue;
    int lo = std::min(a.perm(i), a.perm(i + 1));
    int hi = std::max(a.perm(i), a.perm(i + 1));
    if (hi - lo > 1) return true;
    for (int j = lo; j <= hi; ++j)
      if (a.colours[static_cast<size_t>(j) - 1] != a.colours[static_cast<size_t>(lo) - 1])
        return true;
  }
  return false;
}

bool refines_B(const BComposition& c, const BComposition& d) {
  return refines(c.underlying(), d.underlying()) && c.expand() == d.expand();
}

std::vector<ColouredPermutation> all_elements(const ColourSet& cs, int n) {
  check_degree(n);
  auto perms = all_permutations(n);
  std::vector<ColouredPermutation> out;
  std::vector<int> col(static_cast<size_t>(n), 0);
  while (true) {
    for (const auto& p : perms) out.push_back(ColouredPermutation(col, p));
    int i = n - 1;
    while (i >= 0 && col[static_cast<size_t>(i)] == cs.size() - 1) {
      col[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++col[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BComposition> all_bcompositions(const ColourSet& cs, int n) {
  std::vector<BComposition> out;
  std::vector<std::pair<int, int>> parts;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(BComposition(parts));
      return;
    }
    for (int p = 1; p <= rem; ++p)
      for (int b = 0; b < cs.size(); ++b) {
        parts.emplace_back(p, b);
        self(self, rem - p);
        parts.pop_back();
      }
  };
  rec(rec, n);
  return out;
}

ColouredPermutation descent_class_witness(const BComposition& c) {
  // Required descents: boundaries of c interior to a constant-colour block.
  int n = c.size();
  std::vector<int> runs;
  int cur = 0;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    cur += c.parts[i].first;
    bool merge = i + 1 < c.parts.size() && c.parts[i].second != c.parts[i + 1].second;
    if (!merge) {
      runs.push_back(cur);
      cur = 0;
    }
  }
  if (cur > 0) runs.push_back(cur);
  // sigma with descent set exactly at the run boundaries: later runs carry
  // smaller values, each run ascends.
  std::vector<int> word;
  int suffix = n;
  std::vector<int> starts;
  for (int r : runs) {
    suffix -= r;
    starts.push_back(suffix);
  }
  for (size_t k = 0; k < runs.size(); ++k)
    for (int v = 1; v <= runs[k]; ++v) word.push_back(starts[k] + v);
  return ColouredPermutation::from_sharp(c.expand(), Permutation(std::move(word)));
}

std::vector<BComposition> coarsenings(const BComposition& c) {
  // Merging is allowed across a boundary only when the two colours agree.
  std::vector<BComposition> out;
  std::vector<std::pair<int, int>> parts;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == c.parts.size()) {
      out.push_back(BComposition(parts));
      return;
    }
    // start a new merged part at i and extend while colours stay equal
    int len = 0;
    for (size_t j = i; j < c.parts.size(); ++j) {
      if (j > i && c.parts[j].second != c.parts[i].second) break;
      len += c.parts[j].first;
      parts.emplace_back(len, c.parts[i].second);
      self(self, j + 1);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace wreath
