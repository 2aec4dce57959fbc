// Coalgebra types (1, n; d1, n1; ...; dr, nr) and their raw enumeration.

#ifndef HOPF_TYPESPACE_HPP_
#define HOPF_TYPESPACE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

inline constexpr unsigned kMaxDimension = 600;

struct DegreeCount {
  unsigned degree = 0;
  unsigned count = 0;
  auto operator<=>(const DegreeCount&) const = default;
};

// n group-likes plus, for each degree d >= 2, count matrix coalgebras M_d.
// Canonical form: entries strictly increasing in degree, all counts >= 1.
// Ordering is n first, then the entries lexicographically.
class CoalgebraType {
public:
  CoalgebraType() = default;
  // Validates and canonicalizes (sorts, merges repeated degrees, drops
  // zero counts). Throws InputError for n == 0 or a degree below 2.
  CoalgebraType(unsigned grouplikes, std::vector<DegreeCount> entries);

  unsigned grouplikes() const { return n_; }
  const std::vector<DegreeCount>& entries() const { return entries_; }
  unsigned count_of(unsigned degree) const;
  bool has_degree(unsigned degree) const { return count_of(degree) > 0; }

  // The type (1, N) of a group algebra.
  bool is_pointed() const { return entries_.empty(); }

  // "(1, 12; 4, 3)"
  std::string to_string() const;

  auto operator<=>(const CoalgebraType&) const = default;
  bool operator==(const CoalgebraType&) const = default;

private:
  unsigned n_ = 1;
  std::vector<DegreeCount> entries_;
};

// Accepts "(1, 12; 4, 3)" and the compact "(1,12;4,3)"; the leading
// degree must be 1. Throws InputError.
CoalgebraType parse_coalgebra_type(std::string_view text);

// n + sum count * degree^2
unsigned dimension(const CoalgebraType& t);

// All canonical types of dimension N with n | N and n | count*degree^2
// for every entry, ordered by n then entries. Includes the pointed type.
// Throws InputError unless 1 <= N <= kMaxDimension.
std::vector<CoalgebraType> enumerate_raw(unsigned N);

// Orbits of the simples of one degree under left multiplication by the
// group-likes. Each orbit size o divides n and its stabilizer n/o divides d^2.
struct OrbitConfig {
  unsigned degree = 0;
  std::vector<unsigned> orbit_sizes;  // non-increasing

  std::vector<unsigned> stabilizer_orders(unsigned grouplikes) const;
};

// Every admissible orbit decomposition of the degree-d simples of t. An
// empty result means no action of G(H) fits. Throws InputError if d is
// not a degree of t.
std::vector<OrbitConfig> orbit_configs(const CoalgebraType& t, unsigned d);

// Union of stabilizer orders over orbit_configs(t, d), ascending.
std::vector<unsigned> feasible_stabilizer_orders(const CoalgebraType& t, unsigned d);

std::vector<unsigned> divisors(unsigned n);

} // namespace hopf

#endif
