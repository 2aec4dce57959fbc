#include <algorithm>

#include "hopf/cli.hpp"

namespace hopf {

const std::vector<KnownExample>& known_examples() {
  static const std::vector<KnownExample> examples = {
      {"A0", CoalgebraType(12, {{4, 3}}), GroupSpec::alternating(4), false, "A1", "xi"},
      {"A1", CoalgebraType(1, {{3, 2}, {4, 1}, {5, 1}}), GroupSpec::cyclic(1), false, "A0", "i"},
      {"B", CoalgebraType(4, {{2, 6}, {4, 2}}), GroupSpec::klein(), true, std::nullopt, "vii"},
  };
  return examples;
}

FixtureReport check_fixtures() {
  FixtureReport rep;
  const SieveReport sieve = run_sieve(60);
  for (const KnownExample& ex : known_examples()) {
    FixtureCheck c{ex.name, false, std::nullopt, {}};
    if (auto slot = reference_slot_of(ex.coalgebra_type))
      c.slot = std::string(*slot);
    const std::string type = ex.coalgebra_type.to_string();
    if (dimension(ex.coalgebra_type) != 60)
      c.problems.push_back(type + " has dimension " + std::to_string(dimension(ex.coalgebra_type)));
    const bool survives =
        std::any_of(sieve.survivors.begin(), sieve.survivors.end(),
                    [&](const CandidateOutcome& o) { return o.type == ex.coalgebra_type; });
    if (!survives)
      c.problems.push_back(type + " does not survive the sieve");
    if (c.slot != ex.expected_slot)
      c.problems.push_back("expected slot (" + ex.expected_slot + "), got " +
                           (c.slot ? "(" + *c.slot + ")" : std::string("none")));
    const std::size_t g = ex.grouplikes.order();
    if (g != ex.coalgebra_type.grouplikes())
      c.problems.push_back("|G(" + ex.name + ")| = |" + ex.grouplikes.to_string() + "| = " +
                           std::to_string(g) + " but the type has n = " +
                           std::to_string(ex.coalgebra_type.grouplikes()));
    if (ex.dual_of) {
      const auto& all = known_examples();
      auto partner = std::find_if(all.begin(), all.end(),
                                  [&](const KnownExample& o) { return o.name == *ex.dual_of; });
      if (partner == all.end() || partner->dual_of != ex.name)
        c.problems.push_back("duality pairing with " + *ex.dual_of + " is not symmetric");
    }
    if (ex.self_dual == ex.dual_of.has_value())
      c.problems.push_back("self-duality flag disagrees with the dual partner");
    c.ok = c.problems.empty();
    rep.checks.push_back(std::move(c));
  }
  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const FixtureCheck& c) { return c.ok; });
  rep.notes.push_back("A1 is the dual of A0: type (1, 1; 3, 2; 4, 1; 5, 1) against (1, 12; 4, 3)");
  rep.notes.push_back("B is self-dual with G(B) = Z2 x Z2");
  return rep;
}

} // namespace hopf
