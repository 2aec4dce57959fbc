// Finite groups given by dense Cayley tables.
//
// Every group is built from a permutation (or rotation) presentation of
// one of the named families and then compiled to a Cayley table. Elements
// are dense indices 0..order-1 with the identity at index 0; everything
// downstream works on indices only.

#ifndef HOPF_GROUPS_HPP_
#define HOPF_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

using Element = std::uint32_t;
// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

inline constexpr std::size_t kMaxGroupOrder = 240;

struct GroupSpec {
  enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Klein, Product };

  Family family = Family::Cyclic;
  unsigned n = 1;                  // unused for Klein and Product
  std::vector<GroupSpec> factors;  // exactly two for Product

  static GroupSpec cyclic(unsigned n);
  static GroupSpec dihedral(unsigned n);
  static GroupSpec symmetric(unsigned n);
  static GroupSpec alternating(unsigned n);
  static GroupSpec klein();
  static GroupSpec product(GroupSpec a, GroupSpec b);

  // Order computed arithmetically, without building the table.
  std::size_t order() const;
  // "C5", "D3xD5", "A4", "V4", ...; parse_group_spec(to_string()) == *this.
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;
};

// Accepts "C<n>", "D<n>", "S<n>", "A<n>", "V4" and "<spec>x<spec>"
// (left-associative). Throws InputError on malformed text or bad parameters.
GroupSpec parse_group_spec(std::string_view text);

class FiniteGroup {
public:
  // Throws InputError if the order exceeds kMaxGroupOrder.
  explicit FiniteGroup(const GroupSpec& spec);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return cayley_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element conjugate(Element g, Element by) const {
    return multiply(multiply(by, g), inverses_[by]);
  }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const GroupSpec& spec() const { return spec_; }
  bool is_abelian() const;

  // Throws InputError when the label is unknown.
  Element find(std::string_view label) const;
  // Throws InputError when a is not an element index.
  void check_element(Element a) const;

private:
  GroupSpec spec_;
  std::size_t order_ = 0;
  std::vector<Element> cayley_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr build_group(const GroupSpec& spec);

// Latin square, identity/inverse consistency and full associativity.
// Returns an empty string when all checks pass, else a description.
std::string verify_group_axioms(const FiniteGroup& g);

unsigned element_order(const FiniteGroup& g, Element a);

struct ConjugacyClassPartition {
  std::vector<ElementSet> classes;   // ordered by minimal element index
  std::vector<std::size_t> class_of; // element -> index into classes

  std::size_t size() const { return classes.size(); }
};

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& g);

ElementSet subgroup_generated_by(const FiniteGroup& g, const ElementSet& seed);

ElementSet commutator_subgroup(const FiniteGroup& g);

// |G / [G,G]|
std::size_t abelianization_order(const FiniteGroup& g);

} // namespace hopf

#endif
