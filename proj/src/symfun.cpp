#include "wreath/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreath {

void SchurExpansion::add(const BPartition& p, const Int& k) {
  if (k == 0) return;
  Int& slot = coeffs[p];
  slot += k;
  if (slot == 0) coeffs.erase(p);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  if (!cs) cs = o.cs;
  for (const auto& [p, k] : o.coeffs) add(p, k);
  return *this;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const {
  SchurExpansion r = *this;
  for (const auto& [p, k] : o.coeffs) r.add(p, -k);
  return r;
}

SchurExpansion SchurExpansion::operator*(const Int& k) const {
  SchurExpansion r(cs);
  if (k == 0) return r;
  for (const auto& [p, c] : coeffs) r.coeffs.emplace(p, c * k);
  return r;
}

std::string SchurExpansion::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, k] : coeffs) {
    Int ak = abs(k);
    os << (first ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + "));
    first = false;
    if (ak != 1) os << ak.get_str() << "*";
    os << "s{";
    bool fb = true;
    for (const auto& [b, lambda] : p.parts) {
      if (!fb) os << ",";
      fb = false;
      os << (cs ? cs->name(b) : std::to_string(b)) << ":(";
      for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) os << ",";
        os << lambda[i];
      }
      os << ")";
    }
    os << "}";
  }
  return os.str();
}

void HMonomialExpansion::add(HMonomial m, const Int& k) {
  if (k == 0) return;
  std::sort(m.begin(), m.end());
  Int& slot = coeffs[m];
  slot += k;
  if (slot == 0) coeffs.erase(m);
}

HMonomialExpansion& HMonomialExpansion::operator+=(const HMonomialExpansion& o) {
  if (!cs) cs = o.cs;
  for (const auto& [m, k] : o.coeffs) add(m, k);
  return *this;
}

namespace {

std::mutex g_kostka_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> g_kostka_cache;

// Count semistandard fillings of lambda with mu_i entries equal to i,
// built column-by-column constraints via row fill: fill entries row by row,
// tracking how many of each letter remain and the previous row.
Int kostka_count(const std::vector<int>& lambda, std::vector<int> mu) {
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  int m = std::accumulate(mu.begin(), mu.end(), 0);
  if (n != m) return 0;
  if (n == 0) return 1;
  int letters = static_cast<int>(mu.size());
  // rows filled one at a time as weakly increasing sequences; the column
  // constraint compares with the row above.
  std::vector<std::vector<int>> rows(lambda.size());
  Int total = 0;
  auto rec = [&](auto&& self, size_t r, int col, int minv) -> void {
    if (r == lambda.size()) {
      total += 1;
      return;
    }
    if (col == lambda[r]) {
      self(self, r + 1, 0, 0);
      return;
    }
    int lo = minv;
    if (r > 0) lo = std::max(lo, rows[r - 1][static_cast<size_t>(col)] + 1);
    for (int v = std::max(lo, 1); v <= letters; ++v) {
      if (mu[static_cast<size_t>(v) - 1] == 0) continue;
      --mu[static_cast<size_t>(v) - 1];
      rows[r].push_back(v);
      self(self, r, col + 1, v);
      rows[r].pop_back();
      ++mu[static_cast<size_t>(v) - 1];
    }
  };
  for (size_t r = 0; r < rows.size(); ++r) rows[r].reserve(static_cast<size_t>(lambda[r]));
  rec(rec, 0, 0, 0);
  return total;
}

} // namespace

Int kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::vector<int> mu_trim = mu;
  while (!mu_trim.empty() && mu_trim.back() == 0) mu_trim.pop_back();
  auto key = std::make_pair(lambda, mu_trim);
  {
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    auto it = g_kostka_cache.find(key);
    if (it != g_kostka_cache.end()) return it->second;
  }
  Int v = kostka_count(lambda, mu_trim);
  std::lock_guard<std::mutex> lock(g_kostka_mutex);
  g_kostka_cache.emplace(std::move(key), v);
  return v;
}

namespace {

// Per-colour expansion h_mu = sum_lambda K_{lambda,mu} s_lambda, where mu is
// the multiset of generator degrees attached to one colour.
std::vector<std::pair<std::vector<int>, Int>> h_product_in_schur(std::vector<int> mu) {
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  std::vector<std::pair<std::vector<int>, Int>> out;
  for (const auto& lambda : partitions_of(n)) {
    Int k = kostka(lambda, mu);
    if (k != 0) out.emplace_back(lambda, k);
  }
  return out;
}

// s_lambda as an integer combination of h_mu over partitions mu of |lambda|.
// Cached per degree: invert the unitriangular Kostka matrix by forward
// substitution along the partition list.
std::mutex g_s2h_mutex;
std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Int>>> g_s2h_cache;

std::vector<std::pair<std::vector<int>, Int>> schur_in_h(const std::vector<int>& lambda) {
  {
    std::lock_guard<std::mutex> lock(g_s2h_mutex);
    auto it = g_s2h_cache.find(lambda);
    if (it != g_s2h_cache.end()) return it->second;
  }
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  auto parts = partitions_of(n);
  size_t m = parts.size();
  // partitions_of lists in reverse-lex order, a linear extension of
  // dominance, so K[i][j] = kostka(parts[i], parts[j]) is unitriangular;
  // solve K x = e_lambda by back substitution over the integers.
  size_t target = 0;
  while (!(parts[target] == lambda)) ++target;
  std::vector<Int> x(m, 0);
  for (size_t j = m; j-- > 0;) {
    Int acc = (j == target) ? 1 : 0;
    for (size_t k = j + 1; k < m; ++k)
      if (x[k] != 0) acc -= kostka(parts[j], parts[k]) * x[k];
    x[j] = acc;
  }
  std::vector<std::pair<std::vector<int>, Int>> out;
  for (size_t j = 0; j < m; ++j)
    if (x[j] != 0) out.emplace_back(parts[j], x[j]);
  std::lock_guard<std::mutex> lock(g_s2h_mutex);
  g_s2h_cache.emplace(lambda, out);
  return out;
}

} // namespace

SchurExpansion h_to_schur(const HMonomialExpansion& x) {
  SchurExpansion out(x.cs);
  for (const auto& [mono, k] : x.coeffs) {
    // group generator degrees by colour
    std::map<int, std::vector<int>> by_colour;
    for (const auto& [n, b] : mono) by_colour[b].push_back(n);
    // tensor the per-colour Schur expansions
    std::vector<std::pair<BPartition, Int>> acc;
    acc.emplace_back(BPartition(), k);
    for (const auto& [b, mu] : by_colour) {
      auto exp_b = h_product_in_schur(mu);
      std::vector<std::pair<BPartition, Int>> next;
      for (const auto& [bp, kk] : acc)
        for (const auto& [lambda, kl] : exp_b) {
          BPartition np = bp;
          if (!lambda.empty()) np.parts[b] = lambda;
          next.emplace_back(std::move(np), kk * kl);
        }
      acc = std::move(next);
    }
    for (const auto& [bp, kk] : acc) out.add(bp, kk);
  }
  return out;
}

HMonomialExpansion schur_to_h(const SchurExpansion& x) {
  HMonomialExpansion out(x.cs);
  for (const auto& [bp, k] : x.coeffs) {
    std::vector<std::pair<HMonomial, Int>> acc;
    acc.emplace_back(HMonomial{}, k);
    for (const auto& [b, lambda] : bp.parts) {
      auto exp_b = schur_in_h(lambda);
      std::vector<std::pair<HMonomial, Int>> next;
      for (const auto& [mono, kk] : acc)
        for (const auto& [mu, km] : exp_b) {
          HMonomial nm = mono;
          for (int part : mu) nm.emplace_back(part, b);
          next.emplace_back(std::move(nm), kk * km);
        }
      acc = std::move(next);
    }
    for (auto& [mono, kk] : acc) out.add(std::move(mono), kk);
  }
  return out;
}

SchurExpansion schur_multiply(const SchurExpansion& a, const SchurExpansion& b) {
  HMonomialExpansion ha = schur_to_h(a), hb = schur_to_h(b);
  HMonomialExpansion prod(a.cs ? a.cs : b.cs);
  for (const auto& [ma, ka] : ha.coeffs)
    for (const auto& [mb, kb] : hb.coeffs) {
      HMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      prod.add(std::move(m), ka * kb);
    }
  return h_to_schur(prod);
}

std::map<std::pair<BPartition, BPartition>, Int> schur_coproduct(const SchurExpansion& x) {
  std::map<std::pair<BPartition, BPartition>, Int> out;
  HMonomialExpansion h = schur_to_h(x);
  for (const auto& [mono, k] : h.coeffs) {
    // coproduct of each generator: h_n(b) -> sum h_i(b) (x) h_{n-i}(b)
    std::vector<std::pair<std::pair<HMonomial, HMonomial>, Int>> acc;
    acc.emplace_back(std::make_pair(HMonomial{}, HMonomial{}), k);
    for (const auto& [n, b] : mono) {
      std::vector<std::pair<std::pair<HMonomial, HMonomial>, Int>> next;
      for (const auto& [pr, kk] : acc)
        for (int i = 0; i <= n; ++i) {
          auto np = pr;
          if (i > 0) np.first.emplace_back(i, b);
          if (i < n) np.second.emplace_back(n - i, b);
          next.emplace_back(std::move(np), kk);
        }
      acc = std::move(next);
    }
    for (auto& [pr, kk] : acc) {
      HMonomialExpansion l(x.cs), r(x.cs);
      l.add(std::move(pr.first), 1);
      r.add(std::move(pr.second), 1);
      SchurExpansion ls = h_to_schur(l), rs = h_to_schur(r);
      for (const auto& [lp, lk] : ls.coeffs)
        for (const auto& [rp, rk] : rs.coeffs) {
          auto key = std::make_pair(lp, rp);
          Int& slot = out[key];
          slot += kk * lk * rk;
          if (slot == 0) out.erase(key);
        }
    }
  }
  return out;
}

SchurExpansion theta_B(const AlgebraElement& x) {
  SchurExpansion out(x.colour_set());
  for (const auto& [T, k] : expand_in_coplactic(x)) out.add(T.shape(), k);
  return out;
}

Int lambda_pairing(const SchurExpansion& x, const SchurExpansion& y) {
  if (x.cs && y.cs && !(*x.cs == *y.cs)) throw Error("colour set mismatch in pairing");
  if (!x.cs && !y.cs) return 0;
  const ColourSet& cs = *(x.cs ? x.cs : y.cs);
  Int out = 0;
  for (const auto& [p, k] : x.coeffs) {
    auto it = y.coeffs.find(p.star(cs));
    if (it != y.coeffs.end()) out += k * it->second;
  }
  return out;
}

std::vector<int> conjugate_partition(const std::vector<int>& lambda) {
  std::vector<int> out;
  for (int j = 1; lambda.empty() ? false : j <= lambda[0]; ++j) {
    int cnt = 0;
    for (int part : lambda)
      if (part >= j) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

SchurExpansion omega_on_colour(const SchurExpansion& x, int colour) {
  SchurExpansion out(x.cs);
  for (const auto& [p, k] : x.coeffs) {
    BPartition q = p;
    auto it = q.parts.find(colour);
    if (it != q.parts.end()) it->second = conjugate_partition(it->second);
    out.add(q, k);
  }
  return out;
}

HMonomialExpansion h_monomial(ColourSetPtr cs, const BComposition& c) {
  HMonomialExpansion out(std::move(cs));
  HMonomial m;
  for (const auto& [n, b] : c.parts) m.emplace_back(n, b);
  out.add(std::move(m), 1);
  return out;
}

} // namespace wreath
