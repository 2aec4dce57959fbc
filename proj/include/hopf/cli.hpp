// Command-line front end, report rendering and the known dimension-60
// examples.

#ifndef HOPF_CLI_HPP_
#define HOPF_CLI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hopf/chartables.hpp"
#include "hopf/graded_support.hpp"
#include "hopf/groups.hpp"
#include "hopf/sieve.hpp"
#include "hopf/typespace.hpp"
#include "json.hpp"

namespace hopf {

struct KnownExample {
  std::string name;  // "A0", "A1", "B"
  CoalgebraType coalgebra_type;
  GroupSpec grouplikes;
  bool self_dual = false;
  std::optional<std::string> dual_of;
  std::string expected_slot;
};

const std::vector<KnownExample>& known_examples();

struct FixtureCheck {
  std::string name;
  bool ok = false;
  std::optional<std::string> slot;  // slot the type landed in
  std::vector<std::string> problems;
};

struct FixtureReport {
  bool ok = false;
  std::vector<FixtureCheck> checks;
  std::vector<std::string> notes;
};

FixtureReport check_fixtures();

struct Report {
  enum class Format { Text, Markdown, Json };
  Format format = Format::Text;
  std::string body;
  int exit_code = 0;  // 0 ok, 1 reference mismatch, 2 invalid input
};

struct RunOptions {
  bool color = false;
};

// argv excludes the program name: {"sieve", "--dim", "60"}.
Report run_command(const std::vector<std::string>& argv, const RunOptions& opts = {});

// JSON encodings shared by the subcommands.
nlohmann::json type_to_json(const CoalgebraType& t);
CoalgebraType type_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json sieve_to_json(const SieveReport& r);
nlohmann::json fusion_to_json(const FusionTable& t);
nlohmann::json supports_to_json(const FiniteGroup& g, const std::vector<ScannedSupport>& scans);
nlohmann::json theorem_to_json(const FiniteGroup& g, const TheoremResult& r);

std::string render_sieve_text(const SieveReport& r, bool explain, bool color);
// Survivor table grouped by slot (for N = 60) plus the eliminated table.
std::string render_sieve_markdown(const SieveReport& r);

} // namespace hopf

#endif
