// Character tables of the bundled groups and the fusion rings of kG and k^G.
//
// fusion_dual_group(G) is the Grothendieck ring of G-representations, i.e.
// the character ring of the commutative Hopf algebra k^G: its labels are the
// irreducible characters of G. fusion_group_algebra(G) is the pointed ring of
// kG whose labels are the group elements.

#ifndef HOPF_CHARTABLES_HPP_
#define HOPF_CHARTABLES_HPP_

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hopf/groups.hpp"
#include "hopf/typespace.hpp"

namespace hopf {

using Label = std::size_t;

struct Irrep {
  std::string name;
  unsigned degree = 1;
  std::vector<std::complex<double>> values;  // one per conjugacy class
};

struct CharacterTable {
  GroupPtr group;
  ConjugacyClassPartition classes;
  std::vector<Irrep> irreps;  // trivial first, then by degree

  std::complex<double> value(std::size_t irrep, Element g) const {
    return irreps[irrep].values[classes.class_of[g]];
  }
};

// Supported: cyclic, dihedral, Klein, A4, S4, A5 and direct products of
// these. Throws InputError for anything else. The result is self-checked
// (orthogonality to 1e-9, sum of squared degrees) before it is returned.
CharacterTable character_table(const GroupSpec& spec);

struct FusionLabel {
  std::string name;
  unsigned degree = 1;
  Label dual = 0;
};

class FusionTable {
public:
  enum class Origin { GroupAlgebra, DualGroupAlgebra, Synthetic };

  // mult is indexed as mult[(k * L + i) * L + j] = N(k; i, j).
  FusionTable(std::vector<FusionLabel> labels, std::vector<unsigned> mult, Origin origin,
              std::string source);

  std::size_t size() const { return labels_.size(); }
  const FusionLabel& label(Label i) const { return labels_[i]; }
  const std::vector<FusionLabel>& labels() const { return labels_; }
  unsigned degree(Label i) const { return labels_[i].degree; }
  Label dual(Label i) const { return labels_[i].dual; }
  // Multiplicity of label k in the product i*j.
  unsigned mult(Label k, Label i, Label j) const {
    return mult_[(k * labels_.size() + i) * labels_.size() + j];
  }
  Origin origin() const { return origin_; }
  // Group spec string the table was built from (empty for synthetic tables).
  const std::string& source() const { return source_; }

  void check_label(Label i) const;

private:
  std::vector<FusionLabel> labels_;
  std::vector<unsigned> mult_;
  Origin origin_;
  std::string source_;
};

std::string to_string(FusionTable::Origin origin);

// Largest distance from an integer seen while rounding the class-sum
// formula for the structure constants; exposed for audits.
struct DualFusionResult {
  FusionTable table;
  double max_rounding_residue = 0.0;
};

// Throws InternalError when a structure constant is further than 1e-6 from
// an integer.
DualFusionResult fusion_dual_group_audited(const GroupSpec& spec);
FusionTable fusion_dual_group(const GroupSpec& spec);

FusionTable fusion_group_algebra(const GroupSpec& spec);

// Nonnegative integer combination of labels.
class RingElement {
public:
  RingElement() = default;
  static RingElement basis(Label i, unsigned coeff = 1);

  unsigned coeff(Label i) const;
  void add(Label i, unsigned coeff);
  const std::map<Label, unsigned>& terms() const { return terms_; }
  unsigned degree(const FusionTable& t) const;

  bool operator==(const RingElement&) const = default;

private:
  std::map<Label, unsigned> terms_;
};

// Bilinear extension of the structure constants. Throws InputError when a
// or b mentions a label outside t.
RingElement decompose_product(const FusionTable& t, const RingElement& a, const RingElement& b);

std::string to_string(const FusionTable& t, const RingElement& x);

// G[chi] = { degree-1 labels g : N(g; chi, chi*) > 0 }, ascending. The
// multiplicative description { g : g*chi = chi } is evaluated as well and any
// disagreement raises InternalError.
std::vector<Label> stabilizer_G(const FusionTable& t, Label chi);

// Degrees of the labels collected into (1, n; d, n_d; ...).
CoalgebraType coalgebra_type_of(const FusionTable& t);

// Each entry is empty when the law holds and otherwise names the first
// offending label triple.
struct FusionAudit {
  std::string degree_multiplicativity;
  std::string unit;
  std::string duality;
  std::string adjunction;
  std::string stabilizer_multiplicity;
  std::string stabilizer_divisibility;
  std::string associativity;

  bool ok() const;
};

// Exhaustive check of the ring axioms over all label triples (quadruples
// for associativity).
FusionAudit audit_fusion_table(const FusionTable& t);

} // namespace hopf

#endif
