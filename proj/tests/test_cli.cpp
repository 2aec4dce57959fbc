#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hopf/cli.hpp"

using namespace hopf;
using nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Table rows "| ... | type | ... |" whose type cell parses.
std::multiset<std::string> markdown_types(const std::string& md, const std::string& section) {
  std::multiset<std::string> out;
  const auto start = md.find("## " + section);
  REQUIRE(start != std::string::npos);
  const auto end = md.find("\n## ", start + 3);
  std::istringstream in(md.substr(start, end == std::string::npos ? std::string::npos : end - start));
  for (std::string line; std::getline(in, line);) {
    if (!line.starts_with("| "))
      continue;
    std::size_t pos = 0;
    while ((pos = line.find("| (1, ", pos)) != std::string::npos) {
      const auto close = line.find(')', pos);
      out.insert(line.substr(pos + 2, close - pos - 1));
      pos = close;
    }
  }
  return out;
}

} // namespace

TEST_CASE("report --dim 60") {
  const Report r = run_command({"report", "--dim", "60"});
  CHECK(r.exit_code == 0);
  CHECK(r.format == Report::Format::Markdown);
  CHECK(contains(r.body, "| (i) |"));
  CHECK(contains(r.body, "| (xiii) |"));
  CHECK(contains(r.body, "reference match: yes"));
  CHECK(contains(r.body, "R-BN610 (imported theorem)"));
  CHECK(markdown_types(r.body, "Survivors").size() == 18);
  CHECK(markdown_types(r.body, "Eliminated").size() == 16);
}

TEST_CASE("markdown and JSON carry the same types and verdicts") {
  for (unsigned N : {36u, 60u, 120u}) {
    CAPTURE(N);
    const SieveReport r = run_sieve(N);
    const json j = sieve_to_json(r);
    const std::string md = render_sieve_markdown(r);

    std::multiset<std::string> json_survivors, json_eliminated;
    for (const json& s : j["survivors"])
      json_survivors.insert(type_from_json(s["type"]).to_string());
    for (const json& e : j["eliminated"]) {
      json_eliminated.insert(type_from_json(e["type"]).to_string());
      const std::string row = type_from_json(e["type"]).to_string() + " | " +
                              e["rule"].get<std::string>();
      CHECK(contains(md, row));
      CHECK(contains(e["reason"].get<std::string>(),
                     std::string(rule_info(*parse_rule_id(e["rule"].get<std::string>())).citation)));
    }
    CHECK(json_survivors == markdown_types(md, "Survivors"));
    CHECK(json_eliminated == markdown_types(md, "Eliminated"));
  }
}

TEST_CASE("JSON type encoding round trips") {
  for (const CoalgebraType& t : enumerate_raw(60))
    CHECK(type_from_json(json::parse(type_to_json(t).dump())) == t);
  CHECK(type_to_json(CoalgebraType(4, {{2, 6}, {4, 2}})) == json::parse("[[1,4],[2,6],[4,2]]"));
  CHECK_THROWS(type_from_json(json::parse("[[2,4]]")));
  CHECK_THROWS(type_from_json(json::parse("\"x\"")));
}

TEST_CASE("sieve subcommand") {
  const Report text = run_command({"sieve", "--dim", "60"});
  CHECK(text.exit_code == 0);
  CHECK(contains(text.body, "18 survivors, 16 eliminated"));
  CHECK_FALSE(contains(text.body, "\x1b["));

  const Report colored = run_command({"sieve", "--dim", "60"}, RunOptions{true});
  CHECK(contains(colored.body, "\x1b["));

  const Report explained = run_command({"sieve", "--dim", "60", "--explain"});
  CHECK(contains(explained.body, "R-HOPFMOD"));
  CHECK(explained.body.size() > text.body.size());

  const Report js = run_command({"sieve", "--dim", "60", "--json"});
  REQUIRE(js.format == Report::Format::Json);
  const json j = json::parse(js.body);
  CHECK(j["survivors"].size() == 18);
  CHECK(j["reference_match"] == true);

  const Report other = run_command({"sieve", "--dim", "48", "--json"});
  CHECK(other.exit_code == 0);
  CHECK(json::parse(other.body)["reference_match"].is_null());
}

TEST_CASE("enumerate subcommand") {
  const Report r = run_command({"enumerate", "--dim", "60", "--json"});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.body);
  CHECK(j["candidates"].size() == enumerate_raw(60).size());
  CHECK(contains(run_command({"enumerate", "--dim", "60"}).body, "(1, 60)"));
  CHECK(contains(run_command({"enumerate", "--dim", "60"}).body, "cocommutative-candidate"));
  CHECK(run_command({"enumerate", "--dim", "0"}).exit_code == 2);
  CHECK(run_command({"enumerate", "--dim", "601"}).exit_code == 2);
  CHECK(run_command({"enumerate", "--dim", "abc"}).exit_code == 2);
  CHECK(run_command({"enumerate"}).exit_code == 2);
}

TEST_CASE("fusion subcommand") {
  const Report r = run_command({"fusion", "--group", "A5", "--dual"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.body, "(1, 1; 3, 2; 4, 1; 5, 1)"));

  const json j = json::parse(run_command({"fusion", "--group", "D5", "--dual", "--json"}).body);
  CHECK(j["labels"].size() == 4);
  CHECK(type_from_json(j["type"]) == CoalgebraType(2, {{2, 2}}));
  const FusionTable t = fusion_dual_group(GroupSpec::dihedral(5));
  std::size_t nonzero = 0;
  for (Label k = 0; k < t.size(); ++k)
    for (Label a = 0; a < t.size(); ++a)
      for (Label b = 0; b < t.size(); ++b)
        nonzero += t.mult(k, a, b) > 0;
  CHECK(j["N"].size() == nonzero);
  for (const json& e : j["N"])
    CHECK(t.mult(e[0], e[1], e[2]) == e[3].get<unsigned>());

  CHECK(run_command({"fusion", "--group", "Q8"}).exit_code == 2);
  CHECK(run_command({"fusion", "--group", "S5", "--dual"}).exit_code == 2);
}

TEST_CASE("support subcommands") {
  const Report r = run_command({"support-check", "--group", "A4", "--total", "5", "--json"});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.body);
  REQUIRE(j["results"].size() == 2);
  for (const json& s : j["results"]) {
    CHECK(s["verdict"] == "ImpossibleNilpotent");
    CHECK(s["witness"]["pairs"].size() == 16);
  }
  CHECK(run_command({"support-check", "--group", "A4", "--total", "13"}).exit_code == 2);

  const Report t = run_command({"support-theorems"});
  CHECK(t.exit_code == 0);
  CHECK(contains(t.body, "support ⊆ rotations"));
  CHECK(contains(t.body, "support ⊆ Klein"));
  CHECK(json::parse(run_command({"support-theorems", "--json"}).body)["all_hold"] == true);
}

TEST_CASE("fixtures") {
  const FixtureReport rep = check_fixtures();
  CHECK(rep.ok);
  REQUIRE(rep.checks.size() == 3);
  for (const FixtureCheck& c : rep.checks) {
    CHECK(c.ok);
    CHECK(c.problems.empty());
  }
  for (const KnownExample& ex : known_examples()) {
    CHECK(dimension(ex.coalgebra_type) == 60);
    CHECK(ex.grouplikes.order() == ex.coalgebra_type.grouplikes());
  }
  const Report r = run_command({"fixtures", "--json"});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.body);
  std::map<std::string, std::string> slots;
  for (const json& c : j["checks"])
    slots[c["name"]] = c["slot"];
  CHECK(slots == std::map<std::string, std::string>{{"A0", "xi"}, {"A1", "i"}, {"B", "vii"}});
}

TEST_CASE("usage errors") {
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"sieve", "--dim", "60", "--bogus"}).exit_code == 2);
  CHECK(contains(run_command({"--help"}).body, "enumerate"));
}
