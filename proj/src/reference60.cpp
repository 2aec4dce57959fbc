// Answer key for dimension 60.

#include "hopf/sieve.hpp"

#include <algorithm>

namespace hopf {

namespace {

CoalgebraType T(unsigned n, std::vector<DegreeCount> e) { return CoalgebraType(n, std::move(e)); }

} // namespace

const std::vector<ReferenceSlot>& reference_slots_60() {
  static const std::vector<ReferenceSlot> slots = {
      {"i", 1, {T(1, {{3, 2}, {4, 1}, {5, 1}})}, "k^A5 or A1"},
      {"ii", 2, {T(2, {{2, 1}, {3, 6}}), T(2, {{2, 1}, {3, 2}, {6, 1}})}, "contains k^{D3}"},
      {"iii", 2, {T(2, {{2, 2}, {5, 2}})}, "contains a Hopf subalgebra of dimension 10"},
      {"iv", 3, {T(3, {{2, 12}, {3, 1}}), T(3, {{3, 1}, {4, 3}})}, ""},
      {"v", 4, {T(4, {{2, 14}}), T(4, {{2, 10}, {4, 1}})}, ""},
      {"vi", 4, {T(4, {{2, 2}, {4, 3}})}, "degree <= 2 simples span a Hopf subalgebra of dimension 12"},
      {"vii", 4, {T(4, {{2, 6}, {4, 2}})}, "type of the self-dual example B"},
      {"viii", 6, {T(6, {{2, 9}, {3, 2}}), T(6, {{3, 6}}), T(6, {{3, 2}, {6, 1}})}, ""},
      {"ix", 10, {T(10, {{5, 2}})}, ""},
      {"x", 12, {T(12, {{2, 12}})}, ""},
      {"xi", 12, {T(12, {{4, 3}})}, "type of A0"},
      {"xii", 15, {T(15, {{3, 5}})}, ""},
      {"xiii", 20, {T(20, {{2, 10}})}, ""},
  };
  return slots;
}

const std::vector<ReferenceElimination>& reference_eliminations_60() {
  static const std::vector<ReferenceElimination> elims = {
      {T(1, {{3, 1}, {5, 2}}), RuleId::BN610},
      {T(1, {{3, 3}, {4, 2}}), RuleId::BN610},
      {T(2, {{2, 10}, {3, 2}}), RuleId::Closure12},
      {T(2, {{2, 6}, {3, 2}, {4, 1}}), RuleId::Closure12},
      {T(2, {{2, 2}, {3, 2}, {4, 2}}), RuleId::HopfMod},
      {T(3, {{2, 3}, {3, 5}}), RuleId::SelfDual2A4},
      {T(3, {{2, 3}, {3, 1}, {6, 1}}), RuleId::SelfDual2A4},
      {T(4, {{2, 1}, {4, 1}, {6, 1}}), RuleId::Odd2},
      {T(4, {{2, 5}, {6, 1}}), RuleId::Odd2},
      {T(4, {{2, 1}, {3, 4}, {4, 1}}), RuleId::Odd2},
      {T(4, {{2, 5}, {3, 4}}), RuleId::Odd2},
      {T(12, {{2, 3}, {6, 1}}), RuleId::Odd2},
      {T(12, {{2, 3}, {3, 4}}), RuleId::Odd2},
  };
  return elims;
}

std::vector<CoalgebraType> reference_survivors_60() {
  std::vector<CoalgebraType> out;
  for (const ReferenceSlot& s : reference_slots_60())
    out.insert(out.end(), s.types.begin(), s.types.end());
  return out;
}

std::optional<std::string_view> reference_slot_of(const CoalgebraType& t) {
  for (const ReferenceSlot& s : reference_slots_60())
    if (std::find(s.types.begin(), s.types.end(), t) != s.types.end())
      return s.numeral;
  return std::nullopt;
}

} // namespace hopf
