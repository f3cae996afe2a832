#include "wreath/json_io.hpp"

namespace wreath {

json coeff_to_json(const Int& k) {
  if (k.fits_slong_p()) return static_cast<long>(k.get_si());
  return k.get_str();
}

Int coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error("coefficient must be an integer or a decimal string");
}

json to_json(const Permutation& p) { return json(p.word()); }

json to_json(const Composition& c) { return json(c.parts); }

json to_json(const MarginMatrix& m) { return json(m.entries); }

json to_json(const ColourSet& cs) {
  json star = json::object();
  for (int i = 0; i < cs.size(); ++i) star[cs.name(i)] = cs.name(cs.star(i));
  json out = {{"colours", json::array()}, {"star", star}};
  for (int i = 0; i < cs.size(); ++i) out["colours"].push_back(cs.name(i));
  if (cs.has_group()) {
    json table = json::array();
    for (int a = 0; a < cs.size(); ++a) {
      json row = json::array();
      for (int b = 0; b < cs.size(); ++b) row.push_back(cs.name(cs.mul(a, b)));
      table.push_back(row);
    }
    out["group"] = table;
  }
  return out;
}

json to_json(const ColouredPermutation& a, const ColourSet& cs) {
  json cols = json::array();
  for (int c : a.colours) cols.push_back(cs.name(c));
  return {{"colours", cols}, {"perm", a.perm.word()}};
}

json to_json(const AlgebraElement& x) {
  const ColourSet& cs = *x.colour_set();
  json terms = json::array();
  for (const auto& [a, k] : x.terms()) {
    json t = to_json(a, cs);
    t["coeff"] = coeff_to_json(k);
    terms.push_back(std::move(t));
  }
  json set = cs.id().empty() ? to_json(cs) : json(cs.id());
  return {{"colour_set", set}, {"terms", terms}};
}

json to_json(const Tableau& t) { return json(t.rows); }

json to_json(const BTableau& t, const ColourSet& cs) {
  json out = json::object();
  for (const auto& [b, tab] : t.per_colour) out[cs.name(b)] = to_json(tab);
  return out;
}

json to_json(const BComposition& c, const ColourSet& cs) {
  json out = json::array();
  for (const auto& [len, b] : c.parts) out.push_back(json::array({len, cs.name(b)}));
  return out;
}

json to_json(const SchurExpansion& s) {
  const ColourSet& cs = *s.cs;
  json out = json::array();
  for (const auto& [p, k] : s.coeffs) {
    json bp = json::object();
    for (const auto& [b, lambda] : p.parts) bp[cs.name(b)] = lambda;
    out.push_back({{"bpartition", bp}, {"coeff", coeff_to_json(k)}});
  }
  return out;
}

json to_json(const CSeries& s) {
  const ColourSet& cs = *s.cs;
  json out = json::array();
  for (const auto& [w, k] : s.coeffs) {
    json weight = json::array();
    for (const auto& [letter, mult] : w)
      weight.push_back({{"letter", letter.first},
                        {"colour", cs.name(letter.second)},
                        {"mult", mult}});
    out.push_back({{"weight", weight}, {"coeff", coeff_to_json(k)}});
  }
  return out;
}

json to_json(const NCSeries& s) {
  const ColourSet& cs = *s.cs;
  json out = json::array();
  for (const auto& [w, k] : s.coeffs) {
    json word = json::array();
    for (const auto& [a, b] : w) word.push_back({{"letter", a}, {"colour", cs.name(b)}});
    out.push_back({{"word", word}, {"coeff", coeff_to_json(k)}});
  }
  return out;
}

json to_json(const SignedComposition& c) { return json(c.parts); }

json to_json(const FiniteAbelianGroup& g) { return {{"cyclic_orders", g.orders}}; }

Permutation permutation_from_json(const json& j) {
  return Permutation(j.get<std::vector<int>>());
}

Composition composition_from_json(const json& j) {
  return Composition(j.get<std::vector<int>>());
}

MarginMatrix margin_matrix_from_json(const json& j) {
  return MarginMatrix(j.get<std::vector<std::vector<int>>>());
}

ColourSetPtr colour_set_from_json(const json& j) {
  if (j.is_string()) {
    std::string id = j.get<std::string>();
    if (id == "trivial") return ColourSet::trivial();
    if (id.rfind("letters:", 0) == 0) return ColourSet::letters(std::stoi(id.substr(8)));
    if (id.rfind("grp:", 0) == 0) return group_colour_set(parse_group(id.substr(4)));
    return dual_colour_set(parse_group(id));
  }
  auto names = j.at("colours").get<std::vector<std::string>>();
  if (j.contains("group")) {
    auto table_names = j.at("group").get<std::vector<std::vector<std::string>>>();
    auto idx = [&](const std::string& n) {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
      throw Error("unknown colour in Cayley table: " + n);
    };
    std::vector<std::vector<int>> table;
    for (const auto& row : table_names) {
      std::vector<int> r;
      for (const auto& n : row) r.push_back(idx(n));
      table.push_back(std::move(r));
    }
    return ColourSet::with_group(std::move(names), std::move(table));
  }
  std::vector<int> star(names.size());
  for (size_t i = 0; i < names.size(); ++i) star[i] = static_cast<int>(i);
  if (j.contains("star")) {
    auto idx = [&](const std::string& n) {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
      throw Error("unknown colour in star map: " + n);
    };
    for (const auto& [from, to] : j.at("star").items())
      star[static_cast<size_t>(idx(from))] = idx(to.get<std::string>());
  }
  return ColourSet::with_star(std::move(names), std::move(star));
}

ColouredPermutation coloured_permutation_from_json(const json& j, const ColourSet& cs) {
  std::vector<int> cols;
  for (const auto& n : j.at("colours")) cols.push_back(cs.index(n.get<std::string>()));
  return ColouredPermutation(std::move(cols), permutation_from_json(j.at("perm")));
}

AlgebraElement algebra_element_from_json(const json& j, ColourSetPtr fallback) {
  ColourSetPtr cs =
      j.contains("colour_set") ? colour_set_from_json(j.at("colour_set")) : fallback;
  if (!cs) throw Error("element JSON needs a colour_set (or pass one via flags)");
  AlgebraElement x(cs);
  for (const auto& t : j.at("terms")) {
    Int k = t.contains("coeff") ? coeff_from_json(t.at("coeff")) : Int(1);
    x.add(coloured_permutation_from_json(t, *cs), k);
  }
  return x;
}

Tableau tableau_from_json(const json& j) {
  return Tableau(j.get<std::vector<std::vector<int>>>());
}

BTableau btableau_from_json(const json& j, const ColourSet& cs) {
  std::map<int, Tableau> t;
  for (const auto& [name, rows] : j.items()) t[cs.index(name)] = tableau_from_json(rows);
  return BTableau(std::move(t));
}

BComposition bcomposition_from_json(const json& j, const ColourSet& cs) {
  std::vector<std::pair<int, int>> parts;
  for (const auto& part : j)
    parts.emplace_back(part.at(0).get<int>(), cs.index(part.at(1).get<std::string>()));
  return BComposition(std::move(parts));
}

SignedComposition signed_composition_from_json(const json& j) {
  return SignedComposition(j.get<std::vector<int>>());
}

FiniteAbelianGroup group_from_json(const json& j) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  return FiniteAbelianGroup(j.at("cyclic_orders").get<std::vector<int>>());
}

} // namespace wreath
