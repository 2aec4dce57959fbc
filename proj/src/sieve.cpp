#include "hopf/sieve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "hopf/chartables.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

const std::array<RuleInfo, 8> kRuleInfo = {{
    {RuleId::NZ, "R-NZ", "group-like count divides the dimension and every n_d d^2",
     "Nichols-Zoeller freeness over kG(H): n | dim H and n | n_d d^2", false},
    {RuleId::StabOrbit, "R-STAB-ORBIT",
     "degree-d simples split into G(H)-orbits whose stabilizers divide d^2",
     "Nichols-Zoeller: |G[chi]| divides (deg chi)^2; orbit-stabilizer under left "
     "multiplication by G(H)",
     false},
    {RuleId::Deg2B, "R-DEG2-B",
     "a degree-2 simple generates B[chi] = k^Gamma with Gamma fixed by |G[chi]|",
     "B[chi] for deg chi = 2 is k^Gamma, Gamma a non-cyclic subgroup of PSL2 of even order: "
     "|G[chi]| = 4 gives Z2xZ2, 2 gives D_m (m >= 3), 1 gives A4, S4 or A5",
     false},
    {RuleId::Odd2, "R-ODD2",
     "4 | n with an odd number of degree-2 simples needs a Hopf subalgebra of dimension 8",
     "an order-4 subgroup of G(H) together with an odd number of degree-2 simples yields a "
     "Hopf subalgebra of dimension 8",
     false},
    {RuleId::Closure12, "R-CLOSURE-12",
     "when G(H) fixes every degree-2 simple, the simples of degree <= 2 span a Hopf "
     "subalgebra of dimension n + 4 n_2",
     "simple subcoalgebras of degrees 1 and 2 (dimensions 1 and 4) span a Hopf subalgebra "
     "once G[chi] = G(H) for every chi of degree 2",
     false},
    {RuleId::HopfMod, "R-HOPFMOD",
     "a family of higher-degree simples closed under products with degree-2 simples is a "
     "Hopf module over the degree-<=2 subalgebra",
     "Nichols-Zoeller for (B, H)-Hopf modules: B C = C forces dim B | dim C; a summand of "
     "degree <= 2 in lambda zeta would put zeta in B",
     false},
    {RuleId::SelfDual2A4, "R-SELFDUAL2-A4",
     "a self-dual degree-2 simple with B[chi] = k^A4 generates k[C] of dimension 24",
     "self-dual chi of degree 2 with G[chi] = 1 and B[chi] = k^A4: chi is not in B[chi], "
     "which then has index 2 in k[C], so dim k[C] = 24 must divide dim H",
     false},
    {RuleId::BN610, "R-BN610",
     "imported theorem: in dimension 60 trivial group-likes force type (1, 1; 3, 2; 4, 1; 5, 1)",
     "imported theorem (classification with G(H) = 1 in dimension 60): H is k^A5 or its "
     "twisted dual, of coalgebra type (1, 1; 3, 2; 4, 1; 5, 1)",
     true},
}};

Verdict make_verdict(RuleId id, Verdict::Outcome outcome, std::string reason,
                     std::vector<std::string> annotations = {}) {
  Verdict v;
  v.outcome = outcome;
  v.rule = id;
  v.reason = std::move(reason);
  if (outcome == Verdict::Outcome::Eliminated)
    v.reason += " [" + std::string(rule_info(id).citation) + "]";
  v.annotations = std::move(annotations);
  if (v.outcome == Verdict::Outcome::Pass && !v.annotations.empty())
    v.outcome = Verdict::Outcome::Annotated;
  return v;
}

Verdict pass(RuleId id, std::string reason) {
  return make_verdict(id, Verdict::Outcome::Pass, std::move(reason));
}

Verdict eliminate(RuleId id, std::string reason) {
  return make_verdict(id, Verdict::Outcome::Eliminated, std::move(reason));
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string s;
  for (const std::string& x : items) {
    if (!s.empty())
      s += sep;
    s += x;
  }
  return s;
}

std::vector<SubalgebraCandidate> build_candidates(unsigned N) {
  std::vector<std::pair<GroupSpec, unsigned>> specs;
  specs.emplace_back(GroupSpec::klein(), 4);
  for (unsigned m = 3; 2 * m <= N; ++m)
    specs.emplace_back(GroupSpec::dihedral(m), 2);
  specs.emplace_back(GroupSpec::alternating(4), 1);
  specs.emplace_back(GroupSpec::symmetric(4), 1);
  specs.emplace_back(GroupSpec::alternating(5), 1);

  std::vector<SubalgebraCandidate> out;
  for (auto& [spec, stab] : specs) {
    const std::size_t order = spec.order();
    if (N % order != 0)
      continue;
    SubalgebraCandidate c{spec.to_string(), spec, stab, order, std::nullopt, std::nullopt};
    if (order <= kMaxGroupOrder) {
      const CharacterTable ct = character_table(spec);
      unsigned lin = 0;
      std::vector<DegreeCount> entries;
      for (const Irrep& r : ct.irreps) {
        if (r.degree == 1)
          ++lin;
        else
          entries.push_back({r.degree, 1});
      }
      c.dual_type = CoalgebraType(lin, std::move(entries));
      c.abelianization = abelianization_order(*ct.group);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool embeds(const CoalgebraType& sub, const CoalgebraType& t, bool must_equal) {
  if (must_equal)
    return sub == t;
  if (sub.grouplikes() > t.grouplikes())
    return false;
  for (const DegreeCount& e : sub.entries())
    if (e.count > t.count_of(e.degree))
      return false;
  return true;
}

// Stabilizer orders at degree 2 that survive R-DEG2-B.
std::vector<unsigned> admissible_orders(const CoalgebraType& t, unsigned N) {
  std::vector<unsigned> s;
  for (const AdmissibleSubalgebras& a : admissible_subalgebras(t, N))
    s.push_back(a.stabilizer);
  return s;
}

const CoalgebraType& a5_type() {
  static const CoalgebraType t(1, {{3, 2}, {4, 1}, {5, 1}});
  return t;
}

} // namespace

const RuleInfo& rule_info(RuleId id) { return kRuleInfo[static_cast<std::size_t>(id)]; }

std::string_view rule_code(RuleId id) { return rule_info(id).code; }

std::optional<RuleId> parse_rule_id(std::string_view code) {
  for (const RuleInfo& r : kRuleInfo)
    if (r.code == code)
      return r.id;
  return std::nullopt;
}

std::string_view to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Pass: return "pass";
    case Verdict::Outcome::Eliminated: return "eliminated";
    case Verdict::Outcome::Annotated: return "annotated";
  }
  return "?";
}

const std::vector<SubalgebraCandidate>& subalgebra_candidates(unsigned N) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<SubalgebraCandidate>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache.emplace(N, build_candidates(N)).first;
  return it->second;
}

std::vector<AdmissibleSubalgebras> admissible_subalgebras(const CoalgebraType& t, unsigned N) {
  std::vector<AdmissibleSubalgebras> out;
  if (!t.has_degree(2))
    return out;
  for (unsigned s : feasible_stabilizer_orders(t, 2)) {
    AdmissibleSubalgebras a{s, {}};
    for (const SubalgebraCandidate& c : subalgebra_candidates(N)) {
      if (c.stabilizer != s)
        continue;
      if (!c.dual_type) {
        a.groups.push_back(c.name + " (unchecked: above order cap)");
        continue;
      }
      if (!embeds(*c.dual_type, t, c.order == N))
        continue;
      if (t.grouplikes() % *c.abelianization != 0)
        continue;
      a.groups.push_back(c.name);
    }
    if (!a.groups.empty())
      out.push_back(std::move(a));
  }
  return out;
}

Verdict rule_nz(const CoalgebraType& t, unsigned N) {
  const unsigned n = t.grouplikes();
  if (dimension(t) != N)
    return eliminate(RuleId::NZ, "dimension " + std::to_string(dimension(t)) + " is not " +
                                     std::to_string(N));
  if (N % n != 0)
    return eliminate(RuleId::NZ, "n = " + std::to_string(n) + " does not divide " +
                                     std::to_string(N));
  for (const DegreeCount& e : t.entries())
    if ((e.count * e.degree * e.degree) % n != 0)
      return eliminate(RuleId::NZ, "n = " + std::to_string(n) + " does not divide n_" +
                                       std::to_string(e.degree) + " d^2 = " +
                                       std::to_string(e.count * e.degree * e.degree));
  return pass(RuleId::NZ, "divisibility holds");
}

Verdict rule_stab_orbit(const CoalgebraType& t) {
  for (const DegreeCount& e : t.entries())
    if (orbit_configs(t, e.degree).empty())
      return eliminate(RuleId::StabOrbit,
                       "no orbit decomposition of the " + std::to_string(e.count) +
                           " simples of degree " + std::to_string(e.degree) + " under |G(H)| = " +
                           std::to_string(t.grouplikes()) + " has stabilizers dividing " +
                           std::to_string(e.degree * e.degree));
  return pass(RuleId::StabOrbit, "every degree admits an orbit decomposition");
}

Verdict rule_deg2_subalgebra(const CoalgebraType& t, unsigned N) {
  if (!t.has_degree(2))
    return pass(RuleId::Deg2B, "no simples of degree 2");
  const std::vector<AdmissibleSubalgebras> adm = admissible_subalgebras(t, N);
  if (adm.empty()) {
    std::vector<std::string> tried;
    for (unsigned s : feasible_stabilizer_orders(t, 2))
      tried.push_back(std::to_string(s));
    return eliminate(RuleId::Deg2B,
                     "no Gamma with k^Gamma inside the type for |G[chi]| in {" + join(tried, ", ") +
                         "}");
  }
  std::vector<std::string> notes;
  for (const AdmissibleSubalgebras& a : adm)
    notes.push_back("|G[chi]| = " + std::to_string(a.stabilizer) + ": B[chi] = k^Gamma, Gamma in {" +
                    join(a.groups, ", ") + "}");
  return make_verdict(RuleId::Deg2B, Verdict::Outcome::Annotated, "admissible Gamma found", notes);
}

Verdict rule_odd_deg2(const CoalgebraType& t, unsigned N) {
  const unsigned n2 = t.count_of(2);
  if (t.grouplikes() % 4 != 0 || n2 % 2 == 0)
    return pass(RuleId::Odd2, "premise (4 | n, odd degree-2 count) not met");
  if (N % 8 != 0)
    return eliminate(RuleId::Odd2, "4 | n and " + std::to_string(n2) +
                                       " degree-2 simples force a Hopf subalgebra of dimension 8, "
                                       "but 8 does not divide " +
                                       std::to_string(N));
  return make_verdict(RuleId::Odd2, Verdict::Outcome::Annotated, "8 divides the dimension",
                      {"contains a Hopf subalgebra of dimension 8"});
}

Verdict rule_closure_div(const CoalgebraType& t, unsigned N) {
  if (!t.has_degree(2))
    return pass(RuleId::Closure12, "no simples of degree 2");
  const std::vector<unsigned> orders = admissible_orders(t, N);
  const unsigned n = t.grouplikes();
  if (orders.empty() || std::any_of(orders.begin(), orders.end(),
                                    [n](unsigned s) { return s != n; }))
    return pass(RuleId::Closure12, "G[chi] = G(H) is not forced for every degree-2 chi");
  const unsigned b = n + 4 * t.count_of(2);
  if (N % b != 0)
    return eliminate(RuleId::Closure12, "closure dimension " + std::to_string(b) +
                                            " does not divide " + std::to_string(N));
  return make_verdict(RuleId::Closure12, Verdict::Outcome::Annotated,
                      "closure dimension divides the dimension",
                      {"Hopf subalgebra of dimension " + std::to_string(b)});
}

std::vector<unsigned> degree_closure(const CoalgebraType& t, unsigned d) {
  std::vector<unsigned> big;
  for (const DegreeCount& e : t.entries())
    if (e.degree > 2)
      big.push_back(e.degree);
  std::set<unsigned> closure{d};
  std::vector<unsigned> queue{d};
  while (!queue.empty()) {
    const unsigned target = 2 * queue.back();
    queue.pop_back();
    // degrees used by some multiset of big degrees summing to target
    std::set<unsigned> used;
    std::vector<unsigned> acc;
    std::function<void(std::size_t, unsigned)> search = [&](std::size_t k, unsigned rem) {
      if (rem == 0) {
        used.insert(acc.begin(), acc.end());
        return;
      }
      for (std::size_t i = k; i < big.size(); ++i)
        if (big[i] <= rem) {
          acc.push_back(big[i]);
          search(i, rem - big[i]);
          acc.pop_back();
        }
    };
    search(0, target);
    for (unsigned x : used)
      if (closure.insert(x).second)
        queue.push_back(x);
  }
  return std::vector<unsigned>(closure.begin(), closure.end());
}

Verdict rule_hopf_module(const CoalgebraType& t, unsigned N) {
  const Verdict closure = rule_closure_div(t, N);
  if (closure.outcome != Verdict::Outcome::Annotated)
    return pass(RuleId::HopfMod, "no degree-<=2 Hopf subalgebra established");
  const unsigned b = t.grouplikes() + 4 * t.count_of(2);
  std::vector<std::string> notes;
  for (const DegreeCount& e : t.entries()) {
    if (e.degree <= 2)
      continue;
    const std::vector<unsigned> family = degree_closure(t, e.degree);
    unsigned dim = 0;
    std::vector<std::string> names;
    for (unsigned x : family) {
      dim += t.count_of(x) * x * x;
      names.push_back(std::to_string(x));
    }
    const std::string label = "closure {" + join(names, ", ") + "} of degree " +
                              std::to_string(e.degree) + " has dimension " + std::to_string(dim);
    if (dim % b != 0)
      return eliminate(RuleId::HopfMod, label + ", not divisible by dim B = " + std::to_string(b));
    notes.push_back(label);
  }
  if (notes.empty())
    return pass(RuleId::HopfMod, "no closed higher-degree family to test");
  return make_verdict(RuleId::HopfMod, Verdict::Outcome::Pass,
                      "every closed family is a multiple of dim B = " + std::to_string(b));
}

Verdict rule_selfdual_a4(const CoalgebraType& t, unsigned N) {
  const unsigned n2 = t.count_of(2);
  if (n2 % 2 == 0)
    return pass(RuleId::SelfDual2A4, "no forced self-dual degree-2 simple");
  const std::vector<AdmissibleSubalgebras> adm = admissible_subalgebras(t, N);
  if (adm.size() != 1 || adm[0].stabilizer != 1 || adm[0].groups != std::vector<std::string>{"A4"})
    return pass(RuleId::SelfDual2A4, "B[chi] = k^A4 with G[chi] = 1 is not forced");
  const SubalgebraCandidate* a4 = nullptr;
  for (const SubalgebraCandidate& c : subalgebra_candidates(N))
    if (c.name == "A4")
      a4 = &c;
  if (a4 == nullptr || !a4->dual_type || a4->dual_type->has_degree(2))
    return pass(RuleId::SelfDual2A4, "chi may lie in B[chi]");
  if (N % 24 != 0)
    return eliminate(RuleId::SelfDual2A4,
                     "a self-dual degree-2 chi with B[chi] = k^A4 gives dim k[C] = 24, which does "
                     "not divide " +
                         std::to_string(N));
  return make_verdict(RuleId::SelfDual2A4, Verdict::Outcome::Annotated, "24 divides the dimension",
                      {"k[C] of dimension 24 for a self-dual degree-2 chi"});
}

Verdict rule_gh1(const CoalgebraType& t, unsigned N) {
  if (N != 60)
    return pass(RuleId::BN610, "inert outside dimension 60");
  if (t.grouplikes() != 1)
    return pass(RuleId::BN610, "G(H) is not trivial");
  if (t == a5_type())
    return make_verdict(RuleId::BN610, Verdict::Outcome::Annotated, "matches the forced type",
                        {"imported theorem: k^A5 or its twisted dual"});
  return eliminate(RuleId::BN610, "G(H) = 1 forces type " + a5_type().to_string() +
                                      " (imported theorem)");
}

Verdict apply_rule(RuleId id, const CoalgebraType& t, unsigned N) {
  switch (id) {
    case RuleId::NZ: return rule_nz(t, N);
    case RuleId::StabOrbit: return rule_stab_orbit(t);
    case RuleId::Deg2B: return rule_deg2_subalgebra(t, N);
    case RuleId::Odd2: return rule_odd_deg2(t, N);
    case RuleId::Closure12: return rule_closure_div(t, N);
    case RuleId::HopfMod: return rule_hopf_module(t, N);
    case RuleId::SelfDual2A4: return rule_selfdual_a4(t, N);
    case RuleId::BN610: return rule_gh1(t, N);
  }
  throw InternalError("unknown rule");
}

const Verdict& CandidateOutcome::deciding_verdict() const {
  for (const Verdict& v : verdicts)
    if (v.rule == deciding_rule)
      return v;
  throw InternalError(type.to_string() + " has no deciding verdict");
}

std::vector<RuleId> CandidateOutcome::failing_rules() const {
  std::vector<RuleId> out;
  for (const Verdict& v : verdicts)
    if (v.eliminated())
      out.push_back(*v.rule);
  return out;
}

std::vector<std::string> CandidateOutcome::annotations() const {
  std::vector<std::string> out;
  for (const Verdict& v : verdicts)
    out.insert(out.end(), v.annotations.begin(), v.annotations.end());
  return out;
}

CandidateOutcome assess(const CoalgebraType& t, unsigned N, std::span<const RuleId> order) {
  CandidateOutcome c{t, {}, std::nullopt};
  for (RuleId id : order) {
    c.verdicts.push_back(apply_rule(id, t, N));
    if (!c.deciding_rule && c.verdicts.back().eliminated())
      c.deciding_rule = id;
  }
  return c;
}

SieveReport run_sieve(unsigned N, std::span<const RuleId> order) {
  const std::vector<CoalgebraType> raw = enumerate_raw(N);
  SieveReport r;
  r.dimension = N;
  r.raw_count = raw.size();
  for (const CoalgebraType& t : raw) {
    if (t.is_pointed() && N > 1) {
      r.pointed_excluded = t;
      continue;
    }
    CandidateOutcome c = assess(t, N, order);
    (c.eliminated() ? r.eliminated : r.survivors).push_back(std::move(c));
  }
  if (N != 60)
    return r;

  std::set<CoalgebraType> got, want;
  for (const CandidateOutcome& c : r.survivors)
    got.insert(c.type);
  for (const CoalgebraType& t : reference_survivors_60())
    want.insert(t);
  for (const CoalgebraType& t : want)
    if (!got.count(t))
      r.reference_diff.push_back("missing survivor " + t.to_string());
  for (const CoalgebraType& t : got)
    if (!want.count(t))
      r.reference_diff.push_back("unexpected survivor " + t.to_string());
  for (const ReferenceElimination& e : reference_eliminations_60()) {
    auto it = std::find_if(r.eliminated.begin(), r.eliminated.end(),
                           [&](const CandidateOutcome& c) { return c.type == e.type; });
    if (it == r.eliminated.end())
      r.reference_diff.push_back("expected elimination of " + e.type.to_string());
    else if (it->deciding_rule != e.rule)
      r.reference_diff.push_back(e.type.to_string() + " decided by " +
                                 std::string(rule_code(*it->deciding_rule)) + ", expected " +
                                 std::string(rule_code(e.rule)));
  }
  r.reference_match = r.reference_diff.empty();
  return r;
}

} // namespace hopf
