#include "hopf/groups.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

using Perm = std::vector<unsigned>;

Perm compose(const Perm& p, const Perm& q) {  // p after q
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[x] = p[q[x]];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    unsigned x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2 == 0;
}

std::string power_label(const char* base, unsigned k) {
  if (k == 0)
    return "";
  if (k == 1)
    return base;
  return std::string(base) + "^" + std::to_string(k);
}

struct Presentation {
  std::vector<Perm> perms;
  std::vector<std::string> labels;
};

Presentation present(const GroupSpec& spec) {
  Presentation pr;
  using F = GroupSpec::Family;
  const unsigned n = spec.n;
  switch (spec.family) {
    case F::Cyclic:
      for (unsigned k = 0; k < n; ++k) {
        Perm p(n);
        for (unsigned x = 0; x < n; ++x)
          p[x] = (x + k) % n;
        pr.perms.push_back(std::move(p));
        pr.labels.push_back(k == 0 ? "1" : power_label("r", k));
      }
      break;
    case F::Dihedral:
      // rotations r^k : x -> x+k, then reflections s r^k : x -> -(x+k)
      for (unsigned refl = 0; refl < 2; ++refl)
        for (unsigned k = 0; k < n; ++k) {
          Perm p(n);
          for (unsigned x = 0; x < n; ++x) {
            unsigned y = (x + k) % n;
            p[x] = refl ? (n - y) % n : y;
          }
          pr.perms.push_back(std::move(p));
          if (refl)
            pr.labels.push_back("s" + power_label("r", k));
          else
            pr.labels.push_back(k == 0 ? "1" : power_label("r", k));
        }
      break;
    case F::Symmetric:
    case F::Alternating: {
      Perm p(n);
      std::iota(p.begin(), p.end(), 0u);
      do {
        if (spec.family == F::Symmetric || is_even(p)) {
          pr.perms.push_back(p);
          pr.labels.push_back(cycle_notation(p));
        }
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case F::Klein:
      for (Perm p : {Perm{0, 1, 2, 3}, Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1},
                     Perm{3, 2, 1, 0}}) {
        pr.labels.push_back(cycle_notation(p));
        pr.perms.push_back(std::move(p));
      }
      break;
    case F::Product:
      break;
  }
  return pr;
}

unsigned parse_parameter(std::string_view digits, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw InputError("malformed group spec '" + std::string(whole) + "'");
  return v;
}

GroupSpec parse_factor(std::string_view t) {
  if (t == "V4")
    return GroupSpec::klein();
  if (t.size() < 2)
    throw InputError("malformed group spec '" + std::string(t) + "'");
  unsigned n = parse_parameter(t.substr(1), t);
  switch (t[0]) {
    case 'C': return GroupSpec::cyclic(n);
    case 'D': return GroupSpec::dihedral(n);
    case 'S': return GroupSpec::symmetric(n);
    case 'A': return GroupSpec::alternating(n);
    default:
      throw InputError("unknown group family in '" + std::string(t) +
                       "' (expected C<n>, D<n>, S<n>, A<n>, V4)");
  }
}

} // namespace

GroupSpec GroupSpec::cyclic(unsigned n) {
  if (n < 1)
    throw InputError("C<n> needs n >= 1");
  return GroupSpec{Family::Cyclic, n, {}};
}

GroupSpec GroupSpec::dihedral(unsigned n) {
  if (n < 3)
    throw InputError("D<n> needs n >= 3");
  return GroupSpec{Family::Dihedral, n, {}};
}

GroupSpec GroupSpec::symmetric(unsigned n) {
  if (n < 1 || n > 5)
    throw InputError("S<n> needs 1 <= n <= 5");
  return GroupSpec{Family::Symmetric, n, {}};
}

GroupSpec GroupSpec::alternating(unsigned n) {
  if (n < 1 || n > 5)
    throw InputError("A<n> needs 1 <= n <= 5");
  return GroupSpec{Family::Alternating, n, {}};
}

GroupSpec GroupSpec::klein() { return GroupSpec{Family::Klein, 4, {}}; }

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  GroupSpec s{Family::Product, 0, {}};
  s.factors.push_back(std::move(a));
  s.factors.push_back(std::move(b));
  return s;
}

std::size_t GroupSpec::order() const {
  switch (family) {
    case Family::Cyclic: return n;
    case Family::Dihedral: return 2 * std::size_t{n};
    case Family::Symmetric:
    case Family::Alternating: {
      std::size_t f = 1;
      for (unsigned k = 2; k <= n; ++k)
        f *= k;
      return family == Family::Alternating && n >= 2 ? f / 2 : f;
    }
    case Family::Klein: return 4;
    case Family::Product: return factors[0].order() * factors[1].order();
  }
  return 0;
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::Cyclic: return "C" + std::to_string(n);
    case Family::Dihedral: return "D" + std::to_string(n);
    case Family::Symmetric: return "S" + std::to_string(n);
    case Family::Alternating: return "A" + std::to_string(n);
    case Family::Klein: return "V4";
    case Family::Product: {
      // no brackets in the grammar: right-nested products print flat
      return factors[0].to_string() + "x" + factors[1].to_string();
    }
  }
  return "?";
}

GroupSpec parse_group_spec(std::string_view text) {
  if (text.empty())
    throw InputError("empty group spec");
  std::size_t start = 0;
  GroupSpec acc;
  bool have = false;
  while (start <= text.size()) {
    std::size_t x = text.find('x', start);
    std::string_view piece = text.substr(start, x == std::string_view::npos ? x : x - start);
    GroupSpec f = parse_factor(piece);
    acc = have ? GroupSpec::product(std::move(acc), std::move(f)) : std::move(f);
    have = true;
    if (x == std::string_view::npos)
      break;
    start = x + 1;
  }
  return acc;
}

FiniteGroup::FiniteGroup(const GroupSpec& spec) : spec_(spec) {
  order_ = spec.order();
  if (order_ > kMaxGroupOrder)
    throw InputError("group " + spec.to_string() + " has order " + std::to_string(order_) +
                     ", above the cap of " + std::to_string(kMaxGroupOrder));
  cayley_.resize(order_ * order_);
  if (spec.family == GroupSpec::Family::Product) {
    FiniteGroup a(spec.factors[0]);
    FiniteGroup b(spec.factors[1]);
    const std::size_t nb = b.order();
    for (std::size_t i = 0; i < order_; ++i) {
      labels_.push_back("(" + a.label(Element(i / nb)) + "," + b.label(Element(i % nb)) + ")");
      for (std::size_t j = 0; j < order_; ++j) {
        Element x = a.multiply(Element(i / nb), Element(j / nb));
        Element y = b.multiply(Element(i % nb), Element(j % nb));
        cayley_[i * order_ + j] = Element(x * nb + y);
      }
    }
  } else {
    Presentation pr = present(spec);
    std::map<Perm, Element> index;
    for (std::size_t i = 0; i < pr.perms.size(); ++i)
      index.emplace(pr.perms[i], Element(i));
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) {
        auto it = index.find(compose(pr.perms[i], pr.perms[j]));
        if (it == index.end())
          throw InternalError("presentation of " + spec.to_string() + " is not closed");
        cayley_[i * order_ + j] = it->second;
      }
    labels_ = std::move(pr.labels);
  }

  inverses_.assign(order_, 0);
  for (std::size_t i = 0; i < order_; ++i) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (std::size_t j = 0; j < order_; ++j) {
      row[cayley_[i * order_ + j]] = true;
      col[cayley_[j * order_ + i]] = true;
      if (cayley_[i * order_ + j] == 0)
        inverses_[i] = Element(j);
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw InternalError("Cayley table of " + spec.to_string() + " is not a Latin square");
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (cayley_[i * order_ + j] != cayley_[j * order_ + i])
        return false;
  return true;
}

Element FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (labels_[i] == label)
      return Element(i);
  throw InputError("no element labelled '" + std::string(label) + "' in " + spec_.to_string());
}

void FiniteGroup::check_element(Element a) const {
  if (a >= order_)
    throw InputError("element index " + std::to_string(a) + " out of range for " +
                     spec_.to_string());
}

GroupPtr build_group(const GroupSpec& spec) {
  return std::make_shared<const FiniteGroup>(spec);
}

std::string verify_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Element b = 0; b < n; ++b) {
      row[g.multiply(a, b)] = true;
      col[g.multiply(b, a)] = true;
    }
    if (std::count(row.begin(), row.end(), true) != std::ptrdiff_t(n) ||
        std::count(col.begin(), col.end(), true) != std::ptrdiff_t(n))
      return "not a Latin square at " + g.label(a);
    if (g.multiply(g.identity(), a) != a || g.multiply(a, g.identity()) != a)
      return "identity fails at " + g.label(a);
    if (g.multiply(a, g.inverse(a)) != g.identity() || g.multiply(g.inverse(a), a) != g.identity())
      return "inverse fails at " + g.label(a);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = g.multiply(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c)))
          return "associativity fails at (" + g.label(a) + ", " + g.label(b) + ", " +
                 g.label(c) + ")";
    }
  return {};
}

unsigned element_order(const FiniteGroup& g, Element a) {
  g.check_element(a);
  unsigned k = 1;
  for (Element x = a; x != g.identity(); x = g.multiply(x, a))
    ++k;
  return k;
}

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyClassPartition p;
  p.class_of.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    if (p.class_of[a] != n)
      continue;
    ElementSet cls;
    for (Element h = 0; h < n; ++h)
      cls.push_back(g.conjugate(a, h));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (Element x : cls)
      p.class_of[x] = p.classes.size();
    p.classes.push_back(std::move(cls));
  }
  return p;
}

ElementSet subgroup_generated_by(const FiniteGroup& g, const ElementSet& seed) {
  for (Element s : seed)
    g.check_element(s);
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  // closing under right multiplication by the generators suffices in a
  // finite group: inverses are positive powers
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : seed) {
      Element x = g.multiply(members[i], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet commutator_subgroup(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  ElementSet commutators;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element c = g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  std::sort(commutators.begin(), commutators.end());
  return subgroup_generated_by(g, commutators);
}

std::size_t abelianization_order(const FiniteGroup& g) {
  return g.order() / commutator_subgroup(g).size();
}

} // namespace hopf
