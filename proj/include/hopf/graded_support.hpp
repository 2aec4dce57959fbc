// Obstructions to group-graded supports of semisimple braided Hopf algebras.
//
// A braided Hopf algebra R over kG is G-graded, R = sum R_g, with the
// grading compatible with the G-action: h . R_g = R_{h g h^-1}. Hence the
// support {g : R_g != 0} is a union of conjugacy classes containing 1.
// With one-dimensional non-identity components u_s, products u_s u_t land
// in R_{st}; this module decides when that alone contradicts semisimplicity.
// The checker is sound but incomplete: Unknown never claims existence.

#ifndef HOPF_GRADED_SUPPORT_HPP_
#define HOPF_GRADED_SUPPORT_HPP_

#include <map>
#include <string>
#include <vector>

#include "hopf/groups.hpp"

namespace hopf {

struct SupportProblem {
  GroupPtr group;
  ElementSet support;
  std::map<Element, unsigned> dims;  // component dimension per support element

  unsigned total() const;
  // Throws InputError if the identity is missing, the support is not
  // conjugation-closed, or dims does not cover exactly the support.
  void validate() const;
};

// All non-identity components one-dimensional; identity component 1.
SupportProblem unit_dimension_problem(GroupPtr group, ElementSet support);

struct ProductTriple {
  Element left = 0;
  Element right = 0;
  Element product = 0;
  bool operator==(const ProductTriple&) const = default;
};

struct Obstruction {
  enum class Verdict { ImpossibleNilpotent, ImpossibleUnitClash, Unknown };

  Verdict verdict = Verdict::Unknown;
  // ImpossibleNilpotent: every ordered pair of non-identity support
  // elements, each product falling outside the support.
  // ImpossibleUnitClash: every ordered pair, mixed products outside the
  // support and squares equal to the identity.
  // Unknown: the pairs whose product stays inside the support.
  std::vector<ProductTriple> pairs;
  std::string trace;

  bool impossible() const { return verdict != Verdict::Unknown; }
};

std::string to_string(Obstruction::Verdict v);

ElementSet conjugation_closure(const FiniteGroup& g, const ElementSet& seed);

// Throws InputError when the problem is malformed or a non-identity
// component has dimension > 1 (outside the one-dimensional argument).
Obstruction support_obstruction(const SupportProblem& p);

// Re-checks every product in the witness against the Cayley table.
bool verify_witness(const FiniteGroup& g, const ElementSet& support, const Obstruction& o);

struct CheckedSupport {
  ElementSet support;
  std::map<Element, unsigned> dims;
  Obstruction obstruction;
  bool witness_verified = false;
};

struct TheoremResult {
  bool holds = false;
  std::string verdict;            // e.g. "support ⊆ rotations" on success
  std::vector<CheckedSupport> checked;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Every conjugation-closed support meeting the reflections with total
// dimension n + 1 over D_n must be obstructed. Throws InputError unless n is
// odd and >= 3.
TheoremResult theorem_dihedral(unsigned n);

// Same for A4 with total dimension 5 and supports meeting the 3-cycles.
TheoremResult theorem_a4();

struct ScannedSupport {
  ElementSet support;
  Obstruction obstruction;
};

// Every conjugation-closed support of the given size containing the
// identity, with unit dimensions, ordered by element list. Throws InputError
// unless 1 <= total <= |G|.
std::vector<ScannedSupport> scan_supports(const FiniteGroup& g, unsigned total);

// Every union of non-identity conjugacy classes together with {1}.
std::vector<ElementSet> closed_supports(const FiniteGroup& g);

} // namespace hopf

#endif
