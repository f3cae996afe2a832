#pragma once

#include <json.hpp>

#include "wreath/characters.hpp"
#include "wreath/hyperoct.hpp"
#include "wreath/words.hpp"

namespace wreath {

using nlohmann::json;

json coeff_to_json(const Int& k);
Int coeff_from_json(const json& j);

json to_json(const Permutation& p);
json to_json(const Composition& c);
json to_json(const MarginMatrix& m);
json to_json(const ColourSet& cs);
json to_json(const ColouredPermutation& a, const ColourSet& cs);
json to_json(const AlgebraElement& x);
json to_json(const Tableau& t);
json to_json(const BTableau& t, const ColourSet& cs);
json to_json(const BComposition& c, const ColourSet& cs);
json to_json(const SchurExpansion& s);
json to_json(const CSeries& s);
json to_json(const NCSeries& s);
json to_json(const SignedComposition& c);
json to_json(const FiniteAbelianGroup& g);

Permutation permutation_from_json(const json& j);
Composition composition_from_json(const json& j);
MarginMatrix margin_matrix_from_json(const json& j);
/// Accepts an inline object or a registered shorthand string
/// ("Z2", "grp:Z3", "trivial", "letters:2").
ColourSetPtr colour_set_from_json(const json& j);
ColouredPermutation coloured_permutation_from_json(const json& j, const ColourSet& cs);
AlgebraElement algebra_element_from_json(const json& j, ColourSetPtr fallback = nullptr);
Tableau tableau_from_json(const json& j);
BTableau btableau_from_json(const json& j, const ColourSet& cs);
BComposition bcomposition_from_json(const json& j, const ColourSet& cs);
SignedComposition signed_composition_from_json(const json& j);
FiniteAbelianGroup group_from_json(const json& j);

} // namespace wreath
