#include "wreath/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreath {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> r) : orders(std::move(r)) {
  if (orders.empty()) throw Error("group needs at least one cyclic factor");
  for (int x : orders)
    if (x < 1) throw Error("cyclic orders must be >= 1");
}

int FiniteAbelianGroup::size() const {
  int n = 1;
  for (int r : orders) n *= r;
  return n;
}

int FiniteAbelianGroup::exponent() const {
  long e = 1;
  for (int r : orders) e = std::lcm(e, static_cast<long>(r));
  return static_cast<int>(e);
}

std::vector<int> FiniteAbelianGroup::tuple(int idx) const {
  std::vector<int> t(orders.size());
  for (size_t i = orders.size(); i-- > 0;) {
    t[i] = idx % orders[i];
    idx /= orders[i];
  }
  return t;
}

int FiniteAbelianGroup::index(const std::vector<int>& t) const {
  int idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (t[i] % orders[i]);
  return idx;
}

int FiniteAbelianGroup::add(int a, int b) const {
  auto ta = tuple(a), tb = tuple(b);
  for (size_t i = 0; i < orders.size(); ++i) ta[i] = (ta[i] + tb[i]) % orders[i];
  return index(ta);
}

int FiniteAbelianGroup::neg(int a) const {
  auto t = tuple(a);
  for (size_t i = 0; i < orders.size(); ++i) t[i] = (orders[i] - t[i]) % orders[i];
  return index(t);
}

FiniteAbelianGroup parse_group(const std::string& name) {
  std::vector<int> orders;
  size_t i = 0;
  while (i < name.size()) {
    if (name[i] != 'Z' && name[i] != 'z') throw Error("cannot parse group: " + name);
    ++i;
    size_t j = i;
    while (j < name.size() && isdigit(name[j])) ++j;
    if (j == i) throw Error("cannot parse group: " + name);
    orders.push_back(std::stoi(name.substr(i, j - i)));
    i = j;
    if (i < name.size()) {
      if (name[i] != 'x' && name[i] != 'X') throw Error("cannot parse group: " + name);
      ++i;
    }
  }
  return FiniteAbelianGroup(std::move(orders));
}

namespace {

std::string group_id(const FiniteAbelianGroup& g) {
  std::string id;
  for (size_t i = 0; i < g.orders.size(); ++i) {
    if (i) id += "x";
    id += "Z" + std::to_string(g.orders[i]);
  }
  return id;
}

std::vector<std::string> group_names(const FiniteAbelianGroup& g) {
  std::vector<std::string> names;
  for (int i = 0; i < g.size(); ++i) {
    if (i == 0) {
      names.push_back("t");
    } else if (g.size() == 2) {
      names.push_back("s");
    } else {
      std::string n = "g";
      for (int d : g.tuple(i)) n += std::to_string(d);
      names.push_back(n);
    }
  }
  return names;
}

ColourSetPtr group_like_colour_set(const FiniteAbelianGroup& g, const std::string& id) {
  int k = g.size();
  std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                      std::vector<int>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = g.add(a, b);
  return ColourSet::with_group(group_names(g), std::move(table), id);
}

} // namespace

ColourSetPtr dual_colour_set(const FiniteAbelianGroup& g) {
  return group_like_colour_set(g, group_id(g));
}

ColourSetPtr group_colour_set(const FiniteAbelianGroup& g) {
  return group_like_colour_set(g, "grp:" + group_id(g));
}

namespace {

std::mutex g_phi_mutex;
std::map<int, std::vector<Int>> g_phi_cache;

// Quotient of a by b (monic), both low-first; returns remainder in a.
void poly_divmod_monic(std::vector<Int>& a, const std::vector<Int>& b) {
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    Int lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division of polynomials with integer coefficients, low first.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> quot(num.size() - den.size() + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    Int c = num[k + den.size() - 1];
    // den is not monic in general but its leading coefficient divides exactly
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), den.back().get_mpz_t());
    quot[k] = q;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
  }
  return quot;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(int e) {
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(e);
    if (it != g_phi_cache.end()) return it->second;
  }
  // x^e - 1 divided by the product of Phi_d over proper divisors d
  std::vector<Int> num(static_cast<size_t>(e) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(e)] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  g_phi_cache.emplace(e, num);
  return num;
}

Cyclotomic Cyclotomic::zeta_power(int order, long k) {
  Cyclotomic c(order);
  long r = k % order;
  if (r < 0) r += order;
  c.coef_[static_cast<size_t>(r)] = 1;
  return c;
}

Cyclotomic Cyclotomic::integer(int order, const Int& n) {
  Cyclotomic c(order);
  c.coef_[0] = n;
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch");
  for (size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch");
  Cyclotomic r(order_);
  for (size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    for (size_t j = 0; j < o.coef_.size(); ++j) {
      if (o.coef_[j] == 0) continue;
      r.coef_[(i + j) % static_cast<size_t>(order_)] += coef_[i] * o.coef_[j];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::operator*(const Int& k) const {
  Cyclotomic r = *this;
  for (Int& c : r.coef_) c *= k;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch");
  Cyclotomic r = *this;
  for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i] -= o.coef_[i];
  return r;
}

bool Cyclotomic::is_zero() const {
  std::vector<Int> rem = coef_;
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  if (rem.empty()) return true;
  poly_divmod_monic(rem, cyclotomic_polynomial(order_));
  return rem.empty();
}

Int Cyclotomic::as_integer() const {
  // subtract the constant term and check the rest vanishes
  auto phi = cyclotomic_polynomial(order_);
  std::vector<Int> rem = coef_;
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  if (!rem.empty() && rem.size() > 1) poly_divmod_monic(rem, phi);
  if (rem.empty()) return 0;
  if (rem.size() == 1) return rem[0];
  // after reduction the representative may still be non-constant; compare
  // against candidate integers via the difference (order <= small here)
  throw Error("cyclotomic value is not a rational integer");
}

std::string Cyclotomic::str() const {
  std::vector<Int> rem = coef_;
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  if (rem.size() > 1) poly_divmod_monic(rem, cyclotomic_polynomial(order_));
  if (rem.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < rem.size(); ++i) {
    if (rem[i] == 0) continue;
    Int a = abs(rem[i]);
    os << (first ? (rem[i] < 0 ? "-" : "") : (rem[i] < 0 ? " - " : " + "));
    first = false;
    if (i == 0)
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Cyclotomic bracket(const FiniteAbelianGroup& g, int char_idx, int elt_idx) {
  int e = g.exponent();
  auto gamma = g.tuple(char_idx);
  auto x = g.tuple(elt_idx);
  long k = 0;
  for (size_t i = 0; i < g.orders.size(); ++i)
    k += static_cast<long>(gamma[i]) * x[i] * (e / g.orders[i]);
  return Cyclotomic::zeta_power(e, k);
}

InducedCharacter::InducedCharacter(Composition c, std::vector<int> cols)
    : comp(std::move(c)), colours(std::move(cols)) {
  if (comp.parts.size() != colours.size())
    throw Error("induced character: composition and colour lists differ in length");
}

Cyclotomic evaluate_induced(const FiniteAbelianGroup& g, const InducedCharacter& chi,
                            const AlgebraElement& x) {
  int e = g.exponent();
  int n = chi.comp.size();
  Cyclotomic total(e);
  auto u = chi.comp.partial_sums();
  u.insert(u.begin(), 0);
  auto reps = coset_reps(chi.comp);
  std::vector<Permutation> rep_invs;
  rep_invs.reserve(reps.size());
  for (const auto& pi : reps) rep_invs.push_back(pi.inverse());
  for (const auto& [a, k] : x.terms()) {
    if (a.degree() != n) continue;
    std::vector<int> gt = a.sharp_colours(); // g~_j = colour at sigma(j)
    const Permutation& sigma = a.perm;
    Cyclotomic val(e);
    for (size_t r = 0; r < reps.size(); ++r) {
      const Permutation& pi = reps[r];
      const Permutation& piinv = rep_invs[r];
      // pi^{-1} sigma pi must stabilize every block of the composition
      bool stable = true;
      for (size_t j = 0; stable && j + 1 < u.size(); ++j)
        for (int i = u[j] + 1; i <= u[j + 1]; ++i) {
          int pos = piinv(sigma(pi(i)));
          if (pos <= u[j] || pos > u[j + 1]) {
            stable = false;
            break;
          }
        }
      if (!stable) continue;
      Cyclotomic prod = Cyclotomic::integer(e, 1);
      for (size_t j = 0; j + 1 < u.size(); ++j) {
        int acc = 0; // product of the block's group entries
        bool started = false;
        for (int i = u[j] + 1; i <= u[j + 1]; ++i) {
          int gi = gt[static_cast<size_t>(pi(i)) - 1];
          acc = started ? g.add(acc, gi) : gi;
          started = true;
        }
        prod = prod * bracket(g, chi.colours[j], acc);
      }
      val += prod;
    }
    total += val * k;
  }
  return total;
}

HMonomialExpansion theta_G_h(const FiniteAbelianGroup& g, const AlgebraElement& x) {
  if (x.colour_set() && x.colour_set()->size() != g.size())
    throw Error("element colours do not match the dual group");
  HMonomialExpansion out(x.colour_set());
  for (const auto& [c, k] : expand_in_mr_words(x)) {
    HMonomial m;
    for (const auto& [len, col] : c.parts) m.emplace_back(len, col);
    out.add(std::move(m), k);
  }
  return out;
}

SchurExpansion theta_G(const FiniteAbelianGroup& g, const AlgebraElement& x) {
  return h_to_schur(theta_G_h(g, x));
}

Cyclotomic evaluate_schur(const FiniteAbelianGroup& g, const SchurExpansion& chi,
                          const AlgebraElement& x) {
  int e = g.exponent();
  Cyclotomic total(e);
  HMonomialExpansion h = schur_to_h(chi);
  for (const auto& [mono, k] : h.coeffs) {
    std::vector<int> parts, cols;
    for (const auto& [len, col] : mono) {
      parts.push_back(len);
      cols.push_back(col);
    }
    InducedCharacter ind{Composition(std::move(parts)), std::move(cols)};
    total += evaluate_induced(g, ind, x) * k;
  }
  return total;
}

std::pair<Cyclotomic, Cyclotomic> symmetry_check(const FiniteAbelianGroup& g,
                                                 const AlgebraElement& y,
                                                 const AlgebraElement& x) {
  int e = g.exponent();
  Cyclotomic lhs(e), rhs(e);
  for (const auto& [c, k] : expand_in_mr_words(y)) {
    std::vector<int> cols;
    for (const auto& [len, col] : c.parts) cols.push_back(col);
    lhs += evaluate_induced(g, InducedCharacter{c.underlying(), cols}, x) * k;
  }
  for (const auto& [c, k] : expand_in_mr_words(x)) {
    std::vector<int> cols;
    for (const auto& [len, col] : c.parts) cols.push_back(col);
    rhs += evaluate_induced(g, InducedCharacter{c.underlying(), cols}, y) * k;
  }
  return {lhs, rhs};
}

Int phi_tot(const SchurExpansion& x) {
  Int out = 0;
  for (const auto& [p, k] : x.coeffs) {
    if (p.parts.empty()) {
      out += k; // degree 0
      continue;
    }
    if (p.parts.size() == 1) {
      const auto& [b, lambda] = *p.parts.begin();
      if (b == 0 && lambda.size() == 1) out += k; // s_{(n)} at the trivial colour
    }
  }
  return out;
}

namespace {

// Rows of theta_G on the degree-n MR word basis, in Schur coordinates.
struct ThetaMatrix {
  std::vector<BComposition> words;
  std::vector<BPartition> schur_basis;
  linalg::IntRows rows;
};

ThetaMatrix theta_matrix(const FiniteAbelianGroup& g, const ColourSetPtr& cs, int n) {
  ThetaMatrix m;
  m.words = all_bcompositions(*cs, n);
  m.schur_basis = all_bpartitions(*cs, n);
  std::map<BPartition, size_t> index;
  for (size_t i = 0; i < m.schur_basis.size(); ++i) index[m.schur_basis[i]] = i;
  for (const auto& c : m.words) {
    SchurExpansion s = h_to_schur(h_monomial(cs, c));
    std::vector<Int> row(m.schur_basis.size(), 0);
    for (const auto& [p, k] : s.coeffs) row[index.at(p)] = k;
    m.rows.push_back(std::move(row));
  }
  (void)g;
  return m;
}

} // namespace

std::vector<AlgebraElement> theta_kernel_basis(const FiniteAbelianGroup& g,
                                               ColourSetPtr gamma_cs, int n) {
  auto m = theta_matrix(g, gamma_cs, n);
  // kernel of the transpose action: we need integer combinations of words
  // mapping to zero, i.e. the left kernel of rows = right kernel of the
  // transpose.
  linalg::IntRows t(m.schur_basis.size(), std::vector<Int>(m.words.size(), 0));
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.rows[i].size(); ++j) t[j][i] = m.rows[i][j];
  auto ker = linalg::kernel_basis(t, m.words.size());
  std::vector<AlgebraElement> out;
  for (const auto& v : ker) {
    AlgebraElement x(gamma_cs);
    for (size_t i = 0; i < m.words.size(); ++i)
      if (v[i] != 0) x += mr_word(gamma_cs, m.words[i]) * v[i];
    out.push_back(std::move(x));
  }
  return out;
}

bool kernel_equals_pairing_kernel(const FiniteAbelianGroup& g, ColourSetPtr gamma_cs,
                                  int n) {
  auto words = all_bcompositions(*gamma_cs, n);
  // Gram matrix of the pairing restricted to MR_n in the word basis
  std::vector<AlgebraElement> word_elts;
  for (const auto& c : words) word_elts.push_back(mr_word(gamma_cs, c));
  linalg::IntRows gram;
  for (const auto& x : word_elts) {
    std::vector<Int> row;
    for (const auto& y : word_elts) row.push_back(pairing(x, y));
    gram.push_back(std::move(row));
  }
  auto pairing_kernel = linalg::kernel_basis(gram, words.size());

  auto m = theta_matrix(g, gamma_cs, n);
  linalg::IntRows t(m.schur_basis.size(), std::vector<Int>(words.size(), 0));
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.rows[i].size(); ++j) t[j][i] = m.rows[i][j];
  auto theta_kernel = linalg::kernel_basis(t, words.size());

  return linalg::same_row_span(pairing_kernel, theta_kernel);
}

GroupHom::GroupHom(FiniteAbelianGroup d, FiniteAbelianGroup c, std::vector<int> img)
    : dom(std::move(d)), cod(std::move(c)), image(std::move(img)) {
  if (static_cast<int>(image.size()) != dom.size()) throw Error("homomorphism size mismatch");
  for (int a = 0; a < dom.size(); ++a)
    for (int b = 0; b < dom.size(); ++b)
      if (image[static_cast<size_t>(dom.add(a, b))] !=
          cod.add(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]))
        throw Error("not a group homomorphism");
}

std::vector<int> dual_hom(const GroupHom& f) {
  // f^(gamma') = gamma' o f: determine the exponent tuple on dom generators.
  int e_dom = f.dom.exponent();
  std::vector<int> out(static_cast<size_t>(f.cod.size()));
  for (int cidx = 0; cidx < f.cod.size(); ++cidx) {
    std::vector<int> exps(f.dom.orders.size());
    for (size_t i = 0; i < f.dom.orders.size(); ++i) {
      std::vector<int> gen(f.dom.orders.size(), 0);
      gen[i] = 1 % f.dom.orders[i];
      int img = f.image[static_cast<size_t>(f.dom.index(gen))];
      // value of gamma' at img is zeta_{E'}^k; rewrite as power of zeta_{r_i}
      auto gamma = f.cod.tuple(cidx);
      auto x = f.cod.tuple(img);
      long k = 0;
      int e_cod = f.cod.exponent();
      for (size_t j = 0; j < f.cod.orders.size(); ++j)
        k += static_cast<long>(gamma[j]) * x[j] * (e_cod / f.cod.orders[j]);
      k %= e_cod;
      if (k < 0) k += e_cod;
      // gamma'(f(gen_i)) has order dividing r_i, so k*r_i/e_cod is integral
      long num = k * f.dom.orders[i];
      if (num % e_cod != 0) throw Error("dual character exponent is not integral");
      exps[i] = static_cast<int>((num / e_cod) % f.dom.orders[i]);
    }
    out[static_cast<size_t>(cidx)] = f.dom.index(exps);
    (void)e_dom;
  }
  return out;
}

AlgebraElement functorial_map(const GroupHom& f, const AlgebraElement& x) {
  auto dual = dual_hom(f);
  auto cs = dual_colour_set(f.dom);
  AlgebraElement out(cs);
  for (const auto& [a, k] : x.terms()) {
    std::vector<int> cols(a.colours.size());
    for (size_t i = 0; i < cols.size(); ++i)
      cols[i] = dual[static_cast<size_t>(a.colours[i])];
    out.add(ColouredPermutation(std::move(cols), a.perm), k);
  }
  return out;
}

} // namespace wreath
