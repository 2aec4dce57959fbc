// Rule engine that sieves raw coalgebra types down to the admissible ones.
//
// Every rule is a pure predicate of (type, dimension). Rules are
// conservative: when a rule's premise cannot be established from the type
// alone it passes. A candidate is eliminated by the first failing rule in
// the chosen order, but every rule is evaluated so reports show all of them.

#ifndef HOPF_SIEVE_HPP_
#define HOPF_SIEVE_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/groups.hpp"
#include "hopf/typespace.hpp"

namespace hopf {

enum class RuleId { NZ, StabOrbit, Deg2B, Odd2, Closure12, HopfMod, SelfDual2A4, BN610 };

inline constexpr std::array<RuleId, 8> kAllRules = {
    RuleId::NZ,        RuleId::StabOrbit, RuleId::Deg2B,       RuleId::Odd2,
    RuleId::Closure12, RuleId::HopfMod,   RuleId::SelfDual2A4, RuleId::BN610};

struct RuleInfo {
  RuleId id;
  std::string_view code;  // "R-NZ", ...
  std::string_view description;
  std::string_view citation;
  bool imported;  // black-box theorem rather than a combinatorial check
};

const RuleInfo& rule_info(RuleId id);
std::string_view rule_code(RuleId id);
std::optional<RuleId> parse_rule_id(std::string_view code);

struct Verdict {
  enum class Outcome { Pass, Eliminated, Annotated };

  Outcome outcome = Outcome::Pass;
  std::optional<RuleId> rule;
  std::string reason;
  std::vector<std::string> annotations;

  bool eliminated() const { return outcome == Outcome::Eliminated; }
};

std::string_view to_string(Verdict::Outcome o);

// A group Gamma for which k^Gamma could be B[chi] with deg chi = 2.
struct SubalgebraCandidate {
  std::string name;
  GroupSpec spec;
  unsigned stabilizer = 0;  // |G[chi]| this Gamma corresponds to
  std::size_t order = 0;
  // Coalgebra type of k^Gamma and |Gamma/[Gamma,Gamma]|; empty when Gamma is
  // beyond the group order cap, in which case it is admitted unchecked.
  std::optional<CoalgebraType> dual_type;
  std::optional<std::size_t> abelianization;
};

// Candidates of order dividing N: V4 (stabilizer 4), D_m for m >= 3
// (stabilizer 2), A4, S4, A5 (stabilizer 1). Cached per N; thread-safe.
const std::vector<SubalgebraCandidate>& subalgebra_candidates(unsigned N);

struct AdmissibleSubalgebras {
  unsigned stabilizer = 0;
  std::vector<std::string> groups;
};

// For each orbit-feasible stabilizer order at degree 2, the Gammas that
// pass the embedding and abelianization tests. Orders with no admissible
// Gamma are omitted. Empty when t has no degree-2 simples.
std::vector<AdmissibleSubalgebras> admissible_subalgebras(const CoalgebraType& t, unsigned N);

Verdict rule_nz(const CoalgebraType& t, unsigned N);
Verdict rule_stab_orbit(const CoalgebraType& t);
Verdict rule_deg2_subalgebra(const CoalgebraType& t, unsigned N);
Verdict rule_odd_deg2(const CoalgebraType& t, unsigned N);
Verdict rule_closure_div(const CoalgebraType& t, unsigned N);
Verdict rule_hopf_module(const CoalgebraType& t, unsigned N);
Verdict rule_selfdual_a4(const CoalgebraType& t, unsigned N);
Verdict rule_gh1(const CoalgebraType& t, unsigned N);

Verdict apply_rule(RuleId id, const CoalgebraType& t, unsigned N);

// Degrees reached from d through products with a degree-2 simple: the
// degrees > 2 occurring in some multiset of degrees > 2 of t summing to
// 2 d', closed over d'. Never empty, since d' + d' is always a split.
std::vector<unsigned> degree_closure(const CoalgebraType& t, unsigned d);

struct CandidateOutcome {
  CoalgebraType type;
  std::vector<Verdict> verdicts;  // aligned with the rule order used
  std::optional<RuleId> deciding_rule;

  bool eliminated() const { return deciding_rule.has_value(); }
  const Verdict& deciding_verdict() const;
  std::vector<RuleId> failing_rules() const;
  std::vector<std::string> annotations() const;
};

CandidateOutcome assess(const CoalgebraType& t, unsigned N,
                        std::span<const RuleId> order = kAllRules);

struct SieveReport {
  unsigned dimension = 0;
  std::size_t raw_count = 0;
  std::vector<CandidateOutcome> survivors;
  std::vector<CandidateOutcome> eliminated;
  // The pointed type (1, N), set aside because the sieve assumes H is not
  // cocommutative. Not set for N = 1, where it is the only candidate.
  std::optional<CoalgebraType> pointed_excluded;
  // Only for N = 60.
  std::optional<bool> reference_match;
  std::vector<std::string> reference_diff;
};

// Throws InputError unless 1 <= N <= kMaxDimension.
SieveReport run_sieve(unsigned N, std::span<const RuleId> order = kAllRules);

// Dimension-60 answer key: 18 survivors in 13 slots and 13 named
// eliminations with the rule expected to decide each of them.
struct ReferenceSlot {
  std::string_view numeral;
  unsigned grouplikes;
  std::vector<CoalgebraType> types;
  std::string_view remark;
};

struct ReferenceElimination {
  CoalgebraType type;
  RuleId rule;
};

const std::vector<ReferenceSlot>& reference_slots_60();
const std::vector<ReferenceElimination>& reference_eliminations_60();
std::vector<CoalgebraType> reference_survivors_60();
// Roman numeral of the slot holding t, if any.
std::optional<std::string_view> reference_slot_of(const CoalgebraType& t);

} // namespace hopf

#endif
