#include <algorithm>
#include <sstream>

#include "hopf/cli.hpp"
#include "hopf/errors.hpp"

namespace hopf {

using nlohmann::json;

namespace {

json labels_of(const FiniteGroup& g, const ElementSet& s) {
  json out = json::array();
  for (Element x : s)
    out.push_back(g.label(x));
  return out;
}

json witness_to_json(const FiniteGroup& g, const Obstruction& o) {
  json pairs = json::array();
  for (const ProductTriple& pt : o.pairs)
    pairs.push_back({g.label(pt.left), g.label(pt.right), g.label(pt.product)});
  return {{"pairs", pairs}, {"trace", o.trace}};
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const std::string& x : v)
    s += (s.empty() ? "" : sep) + x;
  return s;
}

const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kReset = "\033[0m";

} // namespace

json type_to_json(const CoalgebraType& t) {
  json out = json::array();
  out.push_back({1, t.grouplikes()});
  for (const DegreeCount& e : t.entries())
    out.push_back({e.degree, e.count});
  return out;
}

CoalgebraType type_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("a type must be a nonempty array of [degree, count] pairs");
  std::vector<DegreeCount> entries;
  unsigned n = 0;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("a type entry must be a [degree, count] pair");
    const unsigned d = e[0].get<unsigned>(), c = e[1].get<unsigned>();
    if (d == 1)
      n = c;
    else
      entries.push_back({d, c});
  }
  return CoalgebraType(n, std::move(entries));
}

json verdict_to_json(const Verdict& v) {
  return {{"rule", v.rule ? json(std::string(rule_code(*v.rule))) : json(nullptr)},
          {"outcome", std::string(to_string(v.outcome))},
          {"reason", v.reason},
          {"annotations", v.annotations}};
}

json sieve_to_json(const SieveReport& r) {
  json survivors = json::array(), eliminated = json::array();
  for (const CandidateOutcome& c : r.survivors) {
    json verdicts = json::array();
    for (const Verdict& v : c.verdicts)
      verdicts.push_back(verdict_to_json(v));
    json slot = nullptr;
    if (r.dimension == 60)
      if (auto s = reference_slot_of(c.type))
        slot = std::string(*s);
    survivors.push_back({{"type", type_to_json(c.type)},
                         {"text", c.type.to_string()},
                         {"slot", slot},
                         {"annotations", c.annotations()},
                         {"verdicts", verdicts}});
  }
  for (const CandidateOutcome& c : r.eliminated) {
    json verdicts = json::array(), failing = json::array();
    for (const Verdict& v : c.verdicts)
      verdicts.push_back(verdict_to_json(v));
    for (RuleId id : c.failing_rules())
      failing.push_back(std::string(rule_code(id)));
    const Verdict& d = c.deciding_verdict();
    eliminated.push_back({{"type", type_to_json(c.type)},
                          {"text", c.type.to_string()},
                          {"rule", std::string(rule_code(*c.deciding_rule))},
                          {"imported", rule_info(*c.deciding_rule).imported},
                          {"reason", d.reason},
                          {"failing_rules", failing},
                          {"verdicts", verdicts}});
  }
  return {{"dimension", r.dimension},
          {"raw_count", r.raw_count},
          {"pointed_excluded", r.pointed_excluded ? type_to_json(*r.pointed_excluded) : json(nullptr)},
          {"survivors", survivors},
          {"eliminated", eliminated},
          {"reference_match", r.reference_match ? json(*r.reference_match) : json(nullptr)},
          {"reference_diff", r.reference_diff}};
}

json fusion_to_json(const FusionTable& t) {
  json labels = json::array(), mult = json::array(), stabs = json::array(), type = json::array();
  for (Label i = 0; i < t.size(); ++i) {
    labels.push_back({{"id", i}, {"name", t.label(i).name}, {"degree", t.degree(i)},
                      {"dual", t.dual(i)}});
    stabs.push_back({{"id", i}, {"G", stabilizer_G(t, i)}});
  }
  for (Label k = 0; k < t.size(); ++k)
    for (Label i = 0; i < t.size(); ++i)
      for (Label j = 0; j < t.size(); ++j)
        if (unsigned m = t.mult(k, i, j))
          mult.push_back({k, i, j, m});
  return {{"group", t.source()},
          {"origin", to_string(t.origin())},
          {"labels", labels},
          {"N", mult},
          {"type", type_to_json(coalgebra_type_of(t))},
          {"stabilizers", stabs}};
}

json supports_to_json(const FiniteGroup& g, const std::vector<ScannedSupport>& scans) {
  json results = json::array();
  for (const ScannedSupport& s : scans)
    results.push_back({{"support", labels_of(g, s.support)},
                       {"verdict", to_string(s.obstruction.verdict)},
                       {"witness", witness_to_json(g, s.obstruction)}});
  return {{"group", g.spec().to_string()}, {"results", results}};
}

json theorem_to_json(const FiniteGroup& g, const TheoremResult& r) {
  json checked = json::array();
  for (const CheckedSupport& c : r.checked) {
    json dims = json::object();
    for (const auto& [x, d] : c.dims)
      dims[g.label(x)] = d;
    checked.push_back({{"support", labels_of(g, c.support)},
                       {"dims", dims},
                       {"verdict", to_string(c.obstruction.verdict)},
                       {"witness_verified", c.witness_verified},
                       {"witness", witness_to_json(g, c.obstruction)}});
  }
  return {{"group", g.spec().to_string()},
          {"holds", r.holds},
          {"verdict", r.verdict},
          {"checked", checked},
          {"failures", r.failures},
          {"notes", r.notes}};
}

std::string render_sieve_text(const SieveReport& r, bool explain, bool color) {
  std::ostringstream os;
  auto paint = [&](const char* c, const std::string& s) {
    return color ? std::string(c) + s + kReset : s;
  };
  os << "dimension " << r.dimension << ": " << r.raw_count << " raw candidates";
  if (r.pointed_excluded)
    os << " (pointed " << r.pointed_excluded->to_string() << " set aside)";
  os << "\n";
  os << r.survivors.size() << " survivors, " << r.eliminated.size() << " eliminated\n\n";
  os << "survivors:\n";
  for (const CandidateOutcome& c : r.survivors) {
    os << "  " << paint(kGreen, c.type.to_string());
    if (r.dimension == 60)
      if (auto s = reference_slot_of(c.type))
        os << "  (" << *s << ")";
    const auto notes = c.annotations();
    if (!notes.empty())
      os << "  " << join(notes, "; ");
    os << "\n";
    if (explain)
      for (const Verdict& v : c.verdicts)
        os << "      " << rule_code(*v.rule) << " " << to_string(v.outcome) << ": " << v.reason << "\n";
  }
  os << "\neliminated:\n";
  for (const CandidateOutcome& c : r.eliminated) {
    const RuleId id = *c.deciding_rule;
    os << "  " << paint(kRed, c.type.to_string()) << "  " << rule_code(id);
    if (rule_info(id).imported)
      os << " (imported theorem)";
    os << "\n";
    if (explain) {
      for (const Verdict& v : c.verdicts)
        os << "      " << rule_code(*v.rule) << " " << to_string(v.outcome) << ": " << v.reason << "\n";
    } else {
      os << "      " << c.deciding_verdict().reason << "\n";
    }
  }
  if (r.reference_match) {
    os << "\nreference match: " << (*r.reference_match ? paint(kGreen, "yes") : paint(kRed, "NO"))
       << "\n";
    for (const std::string& d : r.reference_diff)
      os << "  " << d << "\n";
  }
  return os.str();
}

std::string render_sieve_markdown(const SieveReport& r) {
  std::ostringstream os;
  os << "# Coalgebra types of dimension " << r.dimension << "\n\n";
  os << "- raw candidates: " << r.raw_count << "\n";
  if (r.pointed_excluded)
    os << "- pointed type " << r.pointed_excluded->to_string() << " set aside (cocommutative)\n";
  os << "- survivors: " << r.survivors.size() << "\n";
  os << "- eliminated: " << r.eliminated.size() << "\n";
  if (r.reference_match)
    os << "- reference match: " << (*r.reference_match ? "yes" : "no") << "\n";
  for (const std::string& d : r.reference_diff)
    os << "  - " << md_escape(d) << "\n";

  os << "\n## Survivors\n\n";
  if (r.dimension == 60) {
    os << "| Slot | \\|G(H)\\| | Type | Remark | Annotations |\n|---|---|---|---|---|\n";
    for (const ReferenceSlot& slot : reference_slots_60())
      for (const CoalgebraType& t : slot.types) {
        auto it = std::find_if(r.survivors.begin(), r.survivors.end(),
                               [&](const CandidateOutcome& c) { return c.type == t; });
        if (it == r.survivors.end())
          continue;
        os << "| (" << slot.numeral << ") | " << slot.grouplikes << " | " << t.to_string() << " | "
           << md_escape(std::string(slot.remark)) << " | "
           << md_escape(join(it->annotations(), "; ")) << " |\n";
      }
    for (const CandidateOutcome& c : r.survivors)
      if (!reference_slot_of(c.type))
        os << "| - | " << c.type.grouplikes() << " | " << c.type.to_string() << " | unexpected | "
           << md_escape(join(c.annotations(), "; ")) << " |\n";
  } else {
    os << "| \\|G(H)\\| | Type | Annotations |\n|---|---|---|\n";
    for (const CandidateOutcome& c : r.survivors)
      os << "| " << c.type.grouplikes() << " | " << c.type.to_string() << " | "
         << md_escape(join(c.annotations(), "; ")) << " |\n";
  }

  os << "\n## Eliminated\n\n";
  os << "| \\|G(H)\\| | Type | Rule | Reason |\n|---|---|---|---|\n";
  for (const CandidateOutcome& c : r.eliminated) {
    const RuleId id = *c.deciding_rule;
    std::string rule(rule_code(id));
    if (rule_info(id).imported)
      rule += " (imported theorem)";
    os << "| " << c.type.grouplikes() << " | " << c.type.to_string() << " | " << rule << " | "
       << md_escape(c.deciding_verdict().reason) << " |\n";
  }
  return os.str();
}

} // namespace hopf
