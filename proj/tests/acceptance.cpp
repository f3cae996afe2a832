// Acceptance suite: one pass/fail line per criterion, exit non-zero on any
// failure.  Every tolerance is exact equality; the criteria bundle the
// verification suites with their pinned parameters.

#include <chrono>
#include <iostream>
#include <vector>

#include "wreath/verify.hpp"

using namespace wreath;

namespace {

struct Criterion {
  std::string label;
  std::vector<std::pair<std::string, SuiteParams>> runs;
};

SuiteParams params(int degree, int colours = 2, const std::string& group = "Z2",
                   std::uint64_t seed = 0, int alphabet = -1) {
  SuiteParams p;
  p.degree = degree;
  p.colours = colours;
  p.group = group;
  p.seed = seed;
  p.alphabet = alphabet;
  return p;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 worked-example conformance", {{"worked-examples", params(-1)}}},
      {"2 bialgebra axioms (200 seeded pairs, degree <= 6)",
       {{"bialgebra", params(6)}}},
      {"3 double-coset decompositions (n <= 5)", {{"double-coset", params(5)}}},
      {"4 splitting formula and Mantaci-Reutenauer rule",
       {{"mr-rule", params(4)}, {"splitting", params(5)}}},
      {"5 Solomon homomorphism (Z2 and Z3, n <= 3)",
       {{"solomon", params(3, 2, "Z2")}, {"solomon", params(3, 3, "Z3")}}},
      {"6 symmetry theorem (Z2 n <= 4, Z3 n <= 3)",
       {{"symmetry", params(4, 2, "Z2")}, {"symmetry", params(3, 3, "Z3")}}},
      {"7 hyperoctahedral identities (n <= 5)",
       {{"hyperoctahedral", params(5)},
        {"tilde-symmetry-counterexample", params(2)}}},
      {"8 RSO, Knuth and Atkinson suites",
       {{"okada-duality", params(5)}, {"knuth-atkinson", params(4)}}},
      {"9 Theta_B suite (kernel ranks n <= 4, multiplicities n <= 5)",
       {{"theta-b", params(4)}}},
      {"10 word realization (n <= 4, m = n and n+1)",
       {{"word-realization", params(4)}}},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    long checks = 0;
    std::vector<std::string> failures;
    for (const auto& [suite, p] : criterion.runs) {
      VerificationReport r = run_suite(suite, p);
      checks += r.checks;
      for (const auto& f : r.failures) failures.push_back(suite + ": " + f);
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    bool ok = failures.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.label << " ["
              << checks << " checks, " << elapsed << " ms]\n";
    for (size_t i = 0; i < failures.size() && i < 5; ++i)
      std::cout << "      " << failures[i] << "\n";
    if (failures.size() > 5)
      std::cout << "      ... and " << failures.size() - 5 << " more\n";
  }
  if (failed) {
    std::cout << failed << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
