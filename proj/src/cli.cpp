#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/cli.hpp"
#include "hopf/errors.hpp"

namespace hopf {

using nlohmann::json;

namespace {

std::string type_line(const CoalgebraType& t) {
  std::string s = t.to_string() + "  dim = " + std::to_string(t.grouplikes());
  for (const DegreeCount& e : t.entries())
    s += " + " + std::to_string(e.count) + "*" + std::to_string(e.degree) + "^2";
  s += " = " + std::to_string(dimension(t));
  if (t.is_pointed())
    s += "  [cocommutative-candidate]";
  return s;
}

Report enumerate_cmd(unsigned dim, bool as_json) {
  const std::vector<CoalgebraType> types = enumerate_raw(dim);
  if (as_json) {
    json list = json::array();
    for (const CoalgebraType& t : types)
      list.push_back({{"type", type_to_json(t)},
                      {"text", t.to_string()},
                      {"dimension", dimension(t)},
                      {"pointed", t.is_pointed()}});
    return {Report::Format::Json, json{{"dimension", dim}, {"candidates", list}}.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  os << types.size() << " raw coalgebra types of dimension " << dim << "\n";
  for (const CoalgebraType& t : types)
    os << "  " << type_line(t) << "\n";
  return {Report::Format::Text, os.str(), 0};
}

int sieve_exit(const SieveReport& r) { return r.reference_match.value_or(true) ? 0 : 1; }

Report fusion_cmd(const std::string& group, bool dual, bool as_json) {
  const GroupSpec spec = parse_group_spec(group);
  const FusionTable t = dual ? fusion_dual_group(spec) : fusion_group_algebra(spec);
  if (as_json)
    return {Report::Format::Json, fusion_to_json(t).dump(2) + "\n", 0};
  std::ostringstream os;
  os << (dual ? "k^" : "k") << spec.to_string() << " (" << to_string(t.origin()) << "), "
     << t.size() << " labels\n";
  os << "coalgebra type " << coalgebra_type_of(t).to_string() << "\n\nlabels:\n";
  for (Label i = 0; i < t.size(); ++i) {
    std::string stab;
    for (Label g : stabilizer_G(t, i))
      stab += (stab.empty() ? "" : ", ") + t.label(g).name;
    os << "  [" << i << "] " << t.label(i).name << "  deg " << t.degree(i) << "  dual "
       << t.label(t.dual(i)).name << "  G[chi] = {" << stab << "}\n";
  }
  os << "\nproducts:\n";
  for (Label i = 0; i < t.size(); ++i)
    for (Label j = 0; j < t.size(); ++j)
      os << "  " << t.label(i).name << " * " << t.label(j).name << " = "
         << to_string(t, decompose_product(t, RingElement::basis(i), RingElement::basis(j)))
         << "\n";
  return {Report::Format::Text, os.str(), 0};
}

std::string set_text(const FiniteGroup& g, const ElementSet& s) {
  std::string out;
  for (Element x : s)
    out += (out.empty() ? "" : ", ") + g.label(x);
  return "{" + out + "}";
}

Report support_check_cmd(const std::string& group, unsigned total, bool as_json) {
  const GroupPtr g = build_group(parse_group_spec(group));
  const std::vector<ScannedSupport> scans = scan_supports(*g, total);
  if (as_json)
    return {Report::Format::Json, supports_to_json(*g, scans).dump(2) + "\n", 0};
  std::ostringstream os;
  os << scans.size() << " conjugation-closed supports of size " << total << " in "
     << g->spec().to_string() << "\n";
  for (const ScannedSupport& s : scans) {
    os << "  " << set_text(*g, s.support) << "  " << to_string(s.obstruction.verdict) << "\n";
    os << "      " << s.obstruction.trace << "\n";
  }
  return {Report::Format::Text, os.str(), 0};
}

Report theorems_cmd(bool as_json) {
  std::vector<std::pair<GroupPtr, TheoremResult>> runs;
  for (unsigned n = 3; n <= 15; n += 2)
    runs.emplace_back(build_group(GroupSpec::dihedral(n)), theorem_dihedral(n));
  runs.emplace_back(build_group(GroupSpec::alternating(4)), theorem_a4());
  const bool ok = std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.second.holds; });
  if (as_json) {
    json list = json::array();
    for (const auto& [g, r] : runs)
      list.push_back(theorem_to_json(*g, r));
    return {Report::Format::Json, json{{"theorems", list}, {"all_hold", ok}}.dump(2) + "\n",
            ok ? 0 : 1};
  }
  std::ostringstream os;
  for (const auto& [g, r] : runs) {
    os << g->spec().to_string() << ": " << r.verdict << " (" << r.checked.size()
       << " support(s) checked)\n";
    for (const CheckedSupport& c : r.checked)
      os << "  " << set_text(*g, c.support) << "  " << to_string(c.obstruction.verdict)
         << (c.witness_verified ? ", witness re-verified" : ", WITNESS FAILED") << "\n";
    for (const std::string& f : r.failures)
      os << "  failure: " << f << "\n";
    for (const std::string& n : r.notes)
      os << "  note: " << n << "\n";
  }
  return {Report::Format::Text, os.str(), ok ? 0 : 1};
}

Report fixtures_cmd(bool as_json) {
  const FixtureReport rep = check_fixtures();
  if (as_json) {
    json checks = json::array();
    for (const FixtureCheck& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"ok", c.ok},
                        {"slot", c.slot ? json(*c.slot) : json(nullptr)},
                        {"problems", c.problems}});
    return {Report::Format::Json,
            json{{"ok", rep.ok}, {"checks", checks}, {"notes", rep.notes}}.dump(2) + "\n",
            rep.ok ? 0 : 1};
  }
  std::ostringstream os;
  for (const KnownExample& ex : known_examples()) {
    auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                           [&](const FixtureCheck& c) { return c.name == ex.name; });
    os << ex.name << "  " << ex.coalgebra_type.to_string() << "  G = " << ex.grouplikes.to_string()
       << "  slot (" << (it->slot ? *it->slot : std::string("none")) << ")  "
       << (it->ok ? "ok" : "MISMATCH") << "\n";
    for (const std::string& p : it->problems)
      os << "  - " << p << "\n";
  }
  for (const std::string& n : rep.notes)
    os << "note: " << n << "\n";
  return {Report::Format::Text, os.str(), rep.ok ? 0 : 1};
}

} // namespace

Report run_command(const std::vector<std::string>& argv, const RunOptions& opts) {
  CLI::App app{"Coalgebra-type sieve and fusion-ring tools for semisimple Hopf algebras",
               "hopf-sieve"};
  app.require_subcommand(1);

  unsigned dim = 0, total = 0;
  std::string group;
  bool as_json = false, dual = false, explain = false;

  auto* enumerate = app.add_subcommand("enumerate", "list raw coalgebra types of a dimension");
  enumerate->add_option("--dim", dim, "dimension N")->required();
  enumerate->add_flag("--json", as_json, "emit JSON");

  auto* sieve = app.add_subcommand("sieve", "sieve the raw types of a dimension");
  sieve->add_option("--dim", dim, "dimension N")->required();
  sieve->add_flag("--explain", explain, "show every rule verdict");
  sieve->add_flag("--json", as_json, "emit JSON");

  auto* report = app.add_subcommand("report", "markdown table of the sieve result");
  dim = 60;
  report->add_option("--dim", dim, "dimension N")->capture_default_str();
  report->add_flag("--json", as_json, "emit JSON instead of markdown");

  auto* fusion = app.add_subcommand("fusion", "fusion ring of kG, or of k^G with --dual");
  fusion->add_option("--group", group, "group spec: C<n>, D<n>, S<n>, A<n>, V4, AxB")->required();
  fusion->add_flag("--dual", dual, "use k^G (irreducible characters) instead of kG");
  fusion->add_flag("--json", as_json, "emit JSON");

  auto* support = app.add_subcommand("support-check", "obstructions for graded supports");
  support->add_option("--group", group, "group spec")->required();
  support->add_option("--total", total, "support size (total dimension)")->required();
  support->add_flag("--json", as_json, "emit JSON");

  auto* theorems = app.add_subcommand("support-theorems", "dihedral and A4 support theorems");
  theorems->add_flag("--json", as_json, "emit JSON");

  auto* fixtures = app.add_subcommand("fixtures", "check the known dimension-60 examples");
  fixtures->add_flag("--json", as_json, "emit JSON");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      return {Report::Format::Text, target->help(), 0};
    }
    return {Report::Format::Text, std::string("error: ") + e.what() + "\n\n" + app.help(), 2};
  }

  try {
    if (*enumerate)
      return enumerate_cmd(dim, as_json);
    if (*sieve) {
      const SieveReport r = run_sieve(dim);
      if (as_json)
        return {Report::Format::Json, sieve_to_json(r).dump(2) + "\n", sieve_exit(r)};
      return {Report::Format::Text, render_sieve_text(r, explain, opts.color), sieve_exit(r)};
    }
    if (*report) {
      const SieveReport r = run_sieve(dim);
      if (as_json)
        return {Report::Format::Json, sieve_to_json(r).dump(2) + "\n", sieve_exit(r)};
      return {Report::Format::Markdown, render_sieve_markdown(r), sieve_exit(r)};
    }
    if (*fusion)
      return fusion_cmd(group, dual, as_json);
    if (*support)
      return support_check_cmd(group, total, as_json);
    if (*theorems)
      return theorems_cmd(as_json);
    if (*fixtures)
      return fixtures_cmd(as_json);
  } catch (const InputError& e) {
    return {Report::Format::Text, std::string("error: ") + e.what() + "\n", 2};
  }
  return {Report::Format::Text, app.help(), 2};
}

} // namespace hopf
