#include "wreath/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace wreath {

AlgebraElement AlgebraElement::unit(ColourSetPtr cs) {
  AlgebraElement x(std::move(cs));
  x.add(ColouredPermutation({}, Permutation()), 1);
  return x;
}

AlgebraElement AlgebraElement::basis(ColourSetPtr cs, ColouredPermutation a) {
  AlgebraElement x(std::move(cs));
  x.add(a, 1);
  return x;
}

void AlgebraElement::add(const ColouredPermutation& a, const Int& k) {
  if (k == 0) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, k);
    return;
  }
  it->second += k;
  if (it->second == 0) terms_.erase(it);
}

Int AlgebraElement::coeff(const ColouredPermutation& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Int(0) : it->second;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  int deg = 0;
  bool first = true;
  for (const auto& [a, k] : terms_) {
    if (first) {
      deg = a.degree();
      first = false;
    } else if (a.degree() != deg)
      return std::nullopt;
  }
  return deg;
}

void AlgebraElement::require_same_set(const AlgebraElement& o) const {
  if (cs_ && o.cs_ && !(*cs_ == *o.cs_)) throw Error("colour set mismatch");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_set(o);
  if (!cs_) cs_ = o.cs_;
  for (const auto& [a, k] : o.terms_) add(a, k);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_set(o);
  if (!cs_) cs_ = o.cs_;
  for (const auto& [a, k] : o.terms_) add(a, -k);
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r -= o;
  return r;
}

AlgebraElement AlgebraElement::operator*(const Int& k) const {
  AlgebraElement r(cs_);
  if (k == 0) return r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c * k);
  return r;
}

AlgebraElement AlgebraElement::operator-() const { return *this * Int(-1); }

AlgebraElement AlgebraElement::component(int n) const {
  AlgebraElement r(cs_);
  for (const auto& [a, k] : terms_)
    if (a.degree() == n) r.terms_.emplace(a, k);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return terms_ == o.terms_;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, k] : terms_) {
    Int ak = abs(k);
    os << (first ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + "));
    first = false;
    if (ak != 1) os << ak.get_str() << "*";
    os << "(";
    for (size_t i = 0; i < a.colours.size(); ++i) {
      if (i) os << ",";
      os << (cs_ ? cs_->name(a.colours[i]) : std::to_string(a.colours[i]));
    }
    os << ";" << a.perm.str() << ")";
  }
  return os.str();
}

void TensorElement::add(const ColouredPermutation& l, const ColouredPermutation& r,
                        const Int& k) {
  if (k == 0) return;
  auto key = std::make_pair(l, r);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), k);
    return;
  }
  it->second += k;
  if (it->second == 0) terms.erase(it);
}

namespace {

// All terms of the shifted-shuffle product of two basis elements.
void shuffle_terms(const ColouredPermutation& a, const ColouredPermutation& b,
                   const Int& k, AlgebraElement& out) {
  int n = a.degree(), m = b.degree();
  check_degree(n + m);
  std::vector<int> joined_colours = a.colours;
  joined_colours.insert(joined_colours.end(), b.colours.begin(), b.colours.end());
  Permutation block = young_embed({a.perm, b.perm});
  std::vector<int> parts;
  if (n > 0) parts.push_back(n);
  if (m > 0) parts.push_back(m);
  for (const auto& rho : coset_reps(Composition(std::move(parts)))) {
    // left action of rho: colours permuted by rho, permutation rho*block
    std::vector<int> cols(static_cast<size_t>(n + m));
    Permutation rho_inv = rho.inverse();
    for (int i = 1; i <= n + m; ++i)
      cols[static_cast<size_t>(i) - 1] =
          joined_colours[static_cast<size_t>(rho_inv(i)) - 1];
    out.add(ColouredPermutation(std::move(cols), rho * block), k);
  }
}

} // namespace

AlgebraElement external_product(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.colour_set() && y.colour_set() && !(*x.colour_set() == *y.colour_set()))
    throw Error("colour set mismatch in external product");
  AlgebraElement out(x.colour_set() ? x.colour_set() : y.colour_set());
  for (const auto& [a, ka] : x.terms())
    for (const auto& [b, kb] : y.terms()) shuffle_terms(a, b, ka * kb, out);
  return out;
}

TensorElement coproduct(const AlgebraElement& x) {
  TensorElement out;
  out.cs = x.colour_set();
  for (const auto& [a, k] : x.terms()) {
    int n = a.degree();
    Permutation inv = a.perm.inverse();
    for (int cut = 0; cut <= n; ++cut) {
      std::vector<int> lw, rw;
      for (int v = 1; v <= cut; ++v) lw.push_back(inv(v));
      for (int v = cut + 1; v <= n; ++v) rw.push_back(inv(v));
      Permutation pl = standardize(lw).inverse();
      Permutation pr = standardize(rw).inverse();
      std::vector<int> lc(a.colours.begin(), a.colours.begin() + cut);
      std::vector<int> rc(a.colours.begin() + cut, a.colours.end());
      out.add(ColouredPermutation(std::move(lc), std::move(pl)),
              ColouredPermutation(std::move(rc), std::move(pr)), k);
    }
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  out.cs = a.cs ? a.cs : b.cs;
  for (const auto& [pa, ka] : a.terms)
    for (const auto& [pb, kb] : b.terms) {
      AlgebraElement l = external_product(AlgebraElement::basis(out.cs, pa.first),
                                          AlgebraElement::basis(out.cs, pb.first));
      AlgebraElement r = external_product(AlgebraElement::basis(out.cs, pa.second),
                                          AlgebraElement::basis(out.cs, pb.second));
      Int k = ka * kb;
      for (const auto& [la, lk] : l.terms())
        for (const auto& [ra, rk] : r.terms()) out.add(la, ra, k * lk * rk);
    }
  return out;
}

std::map<std::vector<ColouredPermutation>, Int> iterated_coproduct(const AlgebraElement& x,
                                                                   int l) {
  if (l < 1) throw Error("iterated coproduct needs l >= 1");
  std::map<std::vector<ColouredPermutation>, Int> cur;
  for (const auto& [a, k] : x.terms()) cur[{a}] += k;
  for (int step = 1; step < l; ++step) {
    std::map<std::vector<ColouredPermutation>, Int> next;
    for (const auto& [tuple, k] : cur) {
      // expand the first factor
      TensorElement t = coproduct(AlgebraElement::basis(x.colour_set(), tuple[0]));
      for (const auto& [pair, pk] : t.terms) {
        std::vector<ColouredPermutation> nt;
        nt.push_back(pair.first);
        nt.push_back(pair.second);
        nt.insert(nt.end(), tuple.begin() + 1, tuple.end());
        Int& slot = next[nt];
        slot += k * pk;
        if (slot == 0) next.erase(nt);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

AlgebraElement internal_product(const AlgebraElement& x, const AlgebraElement& y) {
  const ColourSetPtr& cs = x.colour_set() ? x.colour_set() : y.colour_set();
  if (!cs || !cs->has_group())
    throw Error("internal product needs a group law on the colour set");
  AlgebraElement out(cs);
  for (const auto& [a, ka] : x.terms())
    for (const auto& [b, kb] : y.terms()) {
      if (a.degree() != b.degree()) continue; // cross-degree products vanish
      int n = a.degree();
      Permutation inv = a.perm.inverse();
      std::vector<int> cols(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i)
        cols[static_cast<size_t>(i) - 1] =
            cs->mul(a.colours[static_cast<size_t>(i) - 1],
                    b.colours[static_cast<size_t>(inv(i)) - 1]);
      out.add(ColouredPermutation(std::move(cols), a.perm * b.perm), ka * kb);
    }
  return out;
}

Int pairing(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.colour_set() && y.colour_set() && !(*x.colour_set() == *y.colour_set()))
    throw Error("colour set mismatch in pairing");
  if (x.is_zero() || y.is_zero()) return 0;
  const ColourSet& cs = *x.colour_set();
  Int out = 0;
  for (const auto& [a, ka] : x.terms()) {
    auto it = y.terms().find(star(a, cs));
    if (it != y.terms().end()) out += ka * it->second;
  }
  return out;
}

Int tau(const AlgebraElement& x) {
  const ColourSetPtr& cs = x.colour_set();
  if (!cs || !cs->has_group()) throw Error("tau needs a group law on the colour set");
  int unit = cs->unit();
  Int out = 0;
  for (const auto& [a, k] : x.terms()) {
    if (a.perm != Permutation::identity(a.degree())) continue;
    bool all_unit = std::all_of(a.colours.begin(), a.colours.end(),
                                [&](int c) { return c == unit; });
    if (all_unit) out += k;
  }
  return out;
}

Int counit(const AlgebraElement& x) {
  return x.coeff(ColouredPermutation({}, Permutation()));
}

AlgebraElement mr_generator(ColourSetPtr cs, int n, int colour) {
  if (n < 1) throw Error("mr_generator needs n >= 1 (degree 0 is the unit)");
  check_degree(n);
  std::vector<int> cols(static_cast<size_t>(n), colour);
  return AlgebraElement::basis(std::move(cs), ColouredPermutation(std::move(cols),
                                                                  Permutation::identity(n)));
}

AlgebraElement mr_word(ColourSetPtr cs, const BComposition& c) {
  int n = c.size();
  check_degree(n);
  AlgebraElement out(cs);
  if (n == 0) return AlgebraElement::unit(cs);
  std::vector<int> sharp = c.expand();
  for (const auto& s : coset_reps(c.underlying()))
    out.add(ColouredPermutation::from_sharp(sharp, s), 1);
  return out;
}

AlgebraElement descent_class(ColourSetPtr cs, const BComposition& c) {
  int n = c.size();
  check_degree(n);
  AlgebraElement out(cs);
  if (n == 0) return AlgebraElement::unit(cs);
  std::vector<int> sharp = c.expand();
  // required descents: interior boundaries of c inside a constant-colour run
  std::set<int> required;
  int acc = 0;
  for (size_t i = 0; i + 1 < c.parts.size(); ++i) {
    acc += c.parts[i].first;
    if (c.parts[i].second == c.parts[i + 1].second) required.insert(acc);
  }
  for (const auto& s : coset_reps(c.underlying())) {
    auto des = descent_set(s);
    if (std::includes(des.begin(), des.end(), required.begin(), required.end()))
      out.add(ColouredPermutation::from_sharp(sharp, s), 1);
  }
  return out;
}

MRExpansion expand_in_mr_basis(const AlgebraElement& x) {
  if (!x.homogeneous_degree())
    throw Error("expand_in_mr_basis needs a homogeneous element");
  MRExpansion e;
  AlgebraElement residual = x;
  std::set<BComposition> seen;
  for (const auto& [a, k] : x.terms()) {
    BComposition c = descent_composition_B(a);
    if (!seen.insert(c).second) continue;
    Int w = x.coeff(descent_class_witness(c));
    if (w != 0) {
      e.coeffs[c] = w;
      residual -= descent_class(x.colour_set(), c) * w;
    }
  }
  if (!residual.is_zero())
    throw NotInSpanError("element is not in the Mantaci-Reutenauer span", residual);
  return e;
}

std::map<BComposition, Int> expand_in_mr_words(const AlgebraElement& x) {
  MRExpansion e = expand_in_mr_basis(x);
  std::map<BComposition, Int> words;
  for (const auto& [c, k] : e.coeffs) {
    int lc = c.length();
    for (const auto& d : coarsenings(c)) {
      Int sign = ((lc - d.length()) % 2 == 0) ? 1 : -1;
      Int& slot = words[d];
      slot += sign * k;
      if (slot == 0) words.erase(d);
    }
  }
  return words;
}

AlgebraElement mr_internal_rule(ColourSetPtr cs, const BComposition& c,
                                const BComposition& d) {
  if (!cs || !cs->has_group())
    throw Error("mr_internal_rule needs a group law on the colour set");
  if (c.size() != d.size()) throw Error("size mismatch in mr_internal_rule");
  AlgebraElement out(cs);
  if (c.size() == 0) return AlgebraElement::unit(cs);
  int k = c.length(), l = d.length();
  for (const auto& m : margin_matrices(c.underlying(), d.underlying())) {
    std::vector<std::pair<int, int>> parts;
    for (int j = 0; j < l; ++j)
      for (int i = 0; i < k; ++i) {
        int mij = m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (mij > 0)
          parts.emplace_back(mij, cs->mul(c.parts[static_cast<size_t>(i)].second,
                                          d.parts[static_cast<size_t>(j)].second));
      }
    out += mr_word(cs, BComposition(std::move(parts)));
  }
  return out;
}

std::vector<Int> coordinates(const AlgebraElement& x,
                             const std::vector<ColouredPermutation>& basis) {
  std::vector<Int> v(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) v[i] = x.coeff(basis[i]);
  return v;
}

AlgebraElement from_coordinates(ColourSetPtr cs, const std::vector<Int>& coords,
                                const std::vector<ColouredPermutation>& basis) {
  AlgebraElement x(std::move(cs));
  for (size_t i = 0; i < basis.size(); ++i) x.add(basis[i], coords[i]);
  return x;
}

std::vector<AlgebraElement> orthogonal_complement(const std::vector<AlgebraElement>& span,
                                                  ColourSetPtr cs, int n) {
  auto basis = all_elements(*cs, n);
  // rows: one per spanning element; entry at beta is the coefficient of
  // star(beta) in the element, so that row . v = pairing(element, v).
  linalg::IntRows rows;
  for (const auto& x : span) {
    std::vector<Int> row(basis.size(), 0);
    for (size_t j = 0; j < basis.size(); ++j) row[j] = x.coeff(star(basis[j], *cs));
    rows.push_back(std::move(row));
  }
  auto ker = linalg::kernel_basis(rows, basis.size());
  std::vector<AlgebraElement> out;
  for (const auto& v : ker) out.push_back(from_coordinates(cs, v, basis));
  return out;
}

} // namespace wreath
