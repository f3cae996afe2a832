// Command-line front end: exact computations in the coloured permutation
// bialgebra and the verification harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wreath/json_io.hpp"
#include "wreath/verify.hpp"

namespace {

using namespace wreath;

json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  // inline JSON literals are accepted next to file paths
  if (path.front() == '{' || path.front() == '[') return json::parse(path);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

ColourSetPtr colour_set_from_flags(int colours, const std::string& group) {
  if (!group.empty()) return dual_colour_set(parse_group(group));
  return ColourSet::letters(colours);
}

AlgebraElement load_element(const std::string& path, int colours, const std::string& group) {
  json j = read_json_input(path);
  if (j.is_array()) {
    // bare term list
    json wrapped = {{"terms", j}};
    return algebra_element_from_json(wrapped, colour_set_from_flags(colours, group));
  }
  return algebra_element_from_json(j, colour_set_from_flags(colours, group));
}

// A bare coloured permutation, or an element JSON carrying a single term.
std::pair<ColourSetPtr, ColouredPermutation> load_coloured_permutation(
    const std::string& path, int colours, const std::string& group) {
  json j = read_json_input(path);
  if (j.contains("terms")) {
    AlgebraElement x = algebra_element_from_json(j, colour_set_from_flags(colours, group));
    if (x.term_count() != 1) throw Error("expected a single basis term");
    return {x.colour_set(), x.terms().begin()->first};
  }
  ColourSetPtr cs = j.contains("colour_set") ? colour_set_from_json(j.at("colour_set"))
                                             : colour_set_from_flags(colours, group);
  return {cs, coloured_permutation_from_json(j, *cs)};
}

void print_element(const AlgebraElement& x, bool as_json) {
  if (as_json)
    std::cout << to_json(x).dump(2) << "\n";
  else
    std::cout << x.str() << "\n";
}

int cli_main(int argc, char** argv) {
  CLI::App app{"exact coloured permutation bialgebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // accept global flags after the subcommand name

  int colours = 2;
  std::string group;
  int alphabet = 0;
  bool as_json = false;
  std::uint64_t seed = 0;
  int degree = -1;
  app.add_option("--colours", colours, "number of free colours (letters a, b, ...)");
  app.add_option("--group", group, "colour group, e.g. Z2, Z3, Z2xZ2");
  app.add_option("--alphabet", alphabet, "alphabet truncation m for word realizations");
  app.add_option("--degree", degree, "degree bound for verification suites");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string input1, input2;

  auto* product = app.add_subcommand("product", "external product of two elements");
  product->add_option("x", input1, "first element (JSON file or - for stdin)")->required();
  product->add_option("y", input2, "second element")->required();

  auto* coprod = app.add_subcommand("coproduct", "coproduct of an element");
  coprod->add_option("x", input1)->required();

  auto* internal = app.add_subcommand("internal", "internal product of two elements");
  internal->add_option("x", input1)->required();
  internal->add_option("y", input2)->required();

  auto* pair_cmd = app.add_subcommand("pairing", "duality pairing of two elements");
  pair_cmd->add_option("x", input1)->required();
  pair_cmd->add_option("y", input2)->required();

  auto* rso_cmd = app.add_subcommand("rso", "RSO insertion and record tableaux");
  rso_cmd->add_option("alpha", input1, "coloured permutation JSON")->required();

  auto* knuth = app.add_subcommand("knuth-class", "Knuth class of a coloured permutation");
  knuth->add_option("alpha", input1)->required();

  auto* atkinson =
      app.add_subcommand("atkinson-class", "Atkinson class of a coloured permutation");
  atkinson->add_option("alpha", input1)->required();

  auto* theta = app.add_subcommand("theta", "Solomon homomorphism into Lambda(Irr G)");
  theta->add_option("x", input1)->required();

  auto* ttheta = app.add_subcommand("tilde-theta", "Bonnafe-Hohlweg variant (G = Z2)");
  ttheta->add_option("x", input1)->required();

  auto* phi_cmd = app.add_subcommand("phi", "word realization over {1..m} x B");
  phi_cmd->add_option("x", input1)->required();

  auto* fundamental =
      app.add_subcommand("fundamental", "Poirier fundamental function of a B-composition");
  fundamental->add_option("c", input1, "B-composition JSON, e.g. [[2,\"a\"],[1,\"b\"]]")
      ->required();

  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "suite name; 'list' prints all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (product->parsed()) {
    auto x = load_element(input1, colours, group);
    auto y = load_element(input2, colours, group);
    print_element(external_product(x, y), as_json);
    return 0;
  }
  if (coprod->parsed()) {
    auto x = load_element(input1, colours, group);
    TensorElement t = coproduct(x);
    const ColourSet& cs = *x.colour_set();
    if (as_json) {
      json out = json::array();
      for (const auto& [pr, k] : t.terms)
        out.push_back({{"left", to_json(pr.first, cs)},
                       {"right", to_json(pr.second, cs)},
                       {"coeff", coeff_to_json(k)}});
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& [pr, k] : t.terms)
        std::cout << k.get_str() << " * " << AlgebraElement::basis(x.colour_set(), pr.first).str()
                  << " (x) " << AlgebraElement::basis(x.colour_set(), pr.second).str() << "\n";
    }
    return 0;
  }
  if (internal->parsed()) {
    auto x = load_element(input1, colours, group);
    auto y = load_element(input2, colours, group);
    print_element(internal_product(x, y), as_json);
    return 0;
  }
  if (pair_cmd->parsed()) {
    auto x = load_element(input1, colours, group);
    auto y = load_element(input2, colours, group);
    std::cout << pairing(x, y).get_str() << "\n";
    return 0;
  }
  if (rso_cmd->parsed()) {
    auto [cs, a] = load_coloured_permutation(input1, colours, group);
    auto [P, Q] = rso(a);
    if (as_json) {
      std::cout << json{{"P", to_json(P, *cs)}, {"Q", to_json(Q, *cs)}}.dump(2) << "\n";
    } else {
      std::cout << "P = " << to_json(P, *cs).dump() << "\n";
      std::cout << "Q = " << to_json(Q, *cs).dump() << "\n";
    }
    return 0;
  }
  if (knuth->parsed() || atkinson->parsed()) {
    auto [cs, a] = load_coloured_permutation(input1, colours, group);
    // breadth-first closure under the chosen elementary relation
    std::set<ColouredPermutation> cls{a};
    std::vector<ColouredPermutation> frontier{a};
    bool use_knuth = knuth->parsed();
    while (!frontier.empty()) {
      std::vector<ColouredPermutation> next;
      for (const auto& cur : frontier)
        for (int i = 1; i < cur.degree(); ++i) {
          auto other = cur.right_si(i);
          bool related = use_knuth ? knuth_related(cur, other) : atkinson_related(cur, other);
          if (related && cls.insert(other).second) next.push_back(other);
        }
      frontier = std::move(next);
    }
    if (as_json) {
      json out = json::array();
      for (const auto& b : cls) out.push_back(to_json(b, *cs));
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& b : cls)
        std::cout << AlgebraElement::basis(cs, b).str() << "\n";
    }
    return 0;
  }
  if (theta->parsed() || ttheta->parsed()) {
    std::string grp = ttheta->parsed() ? "Z2" : (group.empty() ? "Z2" : group);
    auto g = parse_group(grp);
    auto x = load_element(input1, colours, grp);
    SchurExpansion sx = ttheta->parsed() ? tilde_theta(g, x) : theta_G(g, x);
    if (as_json)
      std::cout << to_json(sx).dump(2) << "\n";
    else
      std::cout << sx.str() << "\n";
    return 0;
  }
  if (phi_cmd->parsed()) {
    auto x = load_element(input1, colours, group);
    int m = alphabet > 0 ? alphabet : x.homogeneous_degree().value_or(0);
    NCSeries s = phi(x, m);
    std::cout << to_json(s).dump(as_json ? 2 : -1) << "\n";
    return 0;
  }
  if (fundamental->parsed()) {
    auto cs = colour_set_from_flags(colours, group);
    auto c = bcomposition_from_json(read_json_input(input1), *cs);
    int m = alphabet > 0 ? alphabet : c.size();
    CSeries s = fundamental_F(cs, c, m);
    std::cout << to_json(s).dump(as_json ? 2 : -1) << "\n";
    return 0;
  }
  if (verify->parsed()) {
    if (suite_name == "list") {
      for (const auto& n : suite_names()) std::cout << n << "\n";
      return 0;
    }
    SuiteParams params;
    params.degree = degree;
    params.colours = colours;
    params.alphabet = alphabet > 0 ? alphabet : -1;
    if (!group.empty()) params.group = group;
    params.seed = seed;
    VerificationReport report = run_suite(suite_name, params);
    if (as_json) {
      json out = {{"suite", report.suite},
                  {"params", report.params},
                  {"checks", report.checks},
                  {"failures", report.failures},
                  {"passed", report.passed()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << report.summary() << "\n";
      for (const auto& f : report.failures) std::cout << "  counterexample: " << f << "\n";
    }
    return report.passed() ? 0 : 1;
  }
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return cli_main(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
