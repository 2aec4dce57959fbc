#include "hopf/graded_support.hpp"

#include <algorithm>
#include <functional>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

bool contains(const ElementSet& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

ElementSet non_identity(const FiniteGroup& g, const ElementSet& support) {
  ElementSet out;
  for (Element x : support)
    if (x != g.identity())
      out.push_back(x);
  return out;
}

std::string describe(const FiniteGroup& g, const ElementSet& s) {
  std::string out = "{";
  for (Element x : s) {
    if (out.size() > 1)
      out += ", ";
    out += g.label(x);
  }
  return out + "}";
}

// Calls visit for every union of non-identity classes (plus the identity)
// with at most max_size elements.
void for_each_closed_support(const FiniteGroup& g, std::size_t max_size,
                             const std::function<void(const ElementSet&)>& visit) {
  const ConjugacyClassPartition cls = conjugacy_classes(g);
  ElementSet acc{g.identity()};
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cls.size()) {
      ElementSet s = acc;
      std::sort(s.begin(), s.end());
      visit(s);
      return;
    }
    go(k + 1);
    const ElementSet& c = cls.classes[k];
    if (acc.size() + c.size() <= max_size) {
      acc.insert(acc.end(), c.begin(), c.end());
      go(k + 1);
      acc.resize(acc.size() - c.size());
    }
  };
  go(1);  // class 0 is {identity}
}

struct TheoremSetup {
  GroupPtr group;
  ElementSet must_meet;
  unsigned total;
  std::string success;
};

TheoremResult run_theorem(const TheoremSetup& s) {
  const FiniteGroup& g = *s.group;
  TheoremResult r;
  for_each_closed_support(g, s.total, [&](const ElementSet& support) {
    const bool meets = std::any_of(s.must_meet.begin(), s.must_meet.end(),
                                   [&](Element x) { return contains(support, x); });
    if (!meets)
      return;
    const std::size_t extra = s.total - support.size();
    if (extra > 0 && support.size() > 1) {
      r.failures.push_back("support " + describe(g, support) +
                           " leaves room for a component of dimension > 1");
      return;
    }
    SupportProblem p = unit_dimension_problem(s.group, support);
    p.dims[g.identity()] += unsigned(extra);
    CheckedSupport c{support, p.dims, support_obstruction(p), false};
    c.witness_verified = verify_witness(g, support, c.obstruction);
    if (!c.obstruction.impossible())
      r.failures.push_back("support " + describe(g, support) + " is not obstructed: " +
                           c.obstruction.trace);
    else if (!c.witness_verified)
      r.failures.push_back("witness for " + describe(g, support) + " does not re-verify");
    r.checked.push_back(std::move(c));
  });
  r.holds = r.failures.empty();
  if (r.holds)
    r.verdict = s.success;
  else
    r.verdict = "not established";
  return r;
}

} // namespace

unsigned SupportProblem::total() const {
  unsigned t = 0;
  for (const auto& [x, d] : dims)
    t += d;
  return t;
}

void SupportProblem::validate() const {
  if (!group)
    throw InputError("support problem without a group");
  const FiniteGroup& g = *group;
  for (Element x : support)
    g.check_element(x);
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end())
    throw InputError("support must be a sorted list of distinct elements");
  if (!contains(support, g.identity()))
    throw InputError("support must contain the identity (the unit lies in R_1)");
  for (Element x : support)
    for (Element h = 0; h < g.order(); ++h)
      if (!contains(support, g.conjugate(x, h)))
        throw InputError("support " + describe(g, support) + " is not closed under conjugation (" +
                         g.label(x) + " conjugated by " + g.label(h) + ")");
  if (dims.size() != support.size())
    throw InputError("component dimensions must be given for exactly the support");
  for (const auto& [x, d] : dims)
    if (!contains(support, x) || d == 0)
      throw InputError("component dimension for " + g.label(x) +
                       " must be positive and inside the support");
}

SupportProblem unit_dimension_problem(GroupPtr group, ElementSet support) {
  SupportProblem p{std::move(group), std::move(support), {}};
  for (Element x : p.support)
    p.dims[x] = 1;
  return p;
}

std::string to_string(Obstruction::Verdict v) {
  switch (v) {
    case Obstruction::Verdict::ImpossibleNilpotent: return "ImpossibleNilpotent";
    case Obstruction::Verdict::ImpossibleUnitClash: return "ImpossibleUnitClash";
    case Obstruction::Verdict::Unknown: return "Unknown";
  }
  return "?";
}

ElementSet conjugation_closure(const FiniteGroup& g, const ElementSet& seed) {
  if (seed.empty())
    throw InputError("conjugation closure of an empty set");
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (Element s : seed) {
    g.check_element(s);
    for (Element h = 0; h < g.order(); ++h)
      in[g.conjugate(s, h)] = true;
  }
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (in[x])
      out.push_back(x);
  return out;
}

Obstruction support_obstruction(const SupportProblem& p) {
  p.validate();
  const FiniteGroup& g = *p.group;
  for (const auto& [x, d] : p.dims)
    if (x != g.identity() && d > 1)
      throw InputError("component R_" + g.label(x) + " has dimension " + std::to_string(d) +
                       "; only one-dimensional non-identity components are supported");

  const ElementSet star = non_identity(g, p.support);
  Obstruction o;
  if (star.empty()) {
    o.trace = "support is {1}: R = k is not obstructed";
    return o;
  }
  std::vector<ProductTriple> all, inside;
  for (Element s : star)
    for (Element t : star) {
      const ProductTriple pt{s, t, g.multiply(s, t)};
      all.push_back(pt);
      if (contains(p.support, pt.product))
        inside.push_back(pt);
    }
  if (inside.empty()) {
    o.verdict = Obstruction::Verdict::ImpossibleNilpotent;
    o.pairs = std::move(all);
    o.trace = "every product of non-identity components leaves the support, so they span a "
              "nonzero ideal of square zero";
    return o;
  }
  const bool only_unit_squares = std::all_of(inside.begin(), inside.end(), [&](const ProductTriple& pt) {
    return pt.left == pt.right && pt.product == g.identity();
  });
  if (only_unit_squares && star.size() >= 2) {
    o.verdict = Obstruction::Verdict::ImpossibleUnitClash;
    o.pairs = std::move(all);
    o.trace = "mixed products vanish and squares lie in R_1 = k1; u_i^2 = 1 would give "
              "u_j = u_i (u_i u_j) = 0 for j != i, while all u_i^2 = 0 makes the span of the "
              "u_i a nilpotent ideal";
    return o;
  }
  o.pairs = std::move(inside);
  o.trace = "products staying in the support: neither argument applies";
  return o;
}

bool verify_witness(const FiniteGroup& g, const ElementSet& support, const Obstruction& o) {
  const ElementSet star = non_identity(g, support);
  for (const ProductTriple& pt : o.pairs)
    if (!contains(star, pt.left) || !contains(star, pt.right) ||
        g.multiply(pt.left, pt.right) != pt.product)
      return false;
  switch (o.verdict) {
    case Obstruction::Verdict::ImpossibleNilpotent:
      return !star.empty() && o.pairs.size() == star.size() * star.size() &&
             std::none_of(o.pairs.begin(), o.pairs.end(),
                          [&](const ProductTriple& pt) { return contains(support, pt.product); });
    case Obstruction::Verdict::ImpossibleUnitClash: {
      if (star.size() < 2 || o.pairs.size() != star.size() * star.size())
        return false;
      bool some_unit = false;
      for (const ProductTriple& pt : o.pairs) {
        if (pt.left != pt.right && contains(support, pt.product))
          return false;
        if (pt.left == pt.right && pt.product != g.identity() && contains(support, pt.product))
          return false;
        some_unit = some_unit || (pt.left == pt.right && pt.product == g.identity());
      }
      return some_unit;
    }
    case Obstruction::Verdict::Unknown:
      return std::all_of(o.pairs.begin(), o.pairs.end(),
                         [&](const ProductTriple& pt) { return contains(support, pt.product); });
  }
  return false;
}

TheoremResult theorem_dihedral(unsigned n) {
  if (n < 3 || n % 2 == 0)
    throw InputError("the dihedral support theorem needs an odd n >= 3, got " + std::to_string(n));
  TheoremSetup s{build_group(GroupSpec::dihedral(n)), {}, n + 1, "support ⊆ rotations"};
  for (Element x = Element(n); x < 2 * n; ++x)
    s.must_meet.push_back(x);
  TheoremResult r = run_theorem(s);
  r.notes.push_back("D" + std::to_string(n) + ": the " + std::to_string(n) +
                    " reflections form a single conjugacy class");
  return r;
}

TheoremResult theorem_a4() {
  TheoremSetup s{build_group(GroupSpec::alternating(4)), {}, 5, "support ⊆ Klein"};
  const FiniteGroup& g = *s.group;
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == 3)
      s.must_meet.push_back(x);
  TheoremResult r = run_theorem(s);
  const ElementSet cls = conjugation_closure(g, {g.find("(1 2 3)")});
  r.notes.push_back("the class of (1 2 3) has " + std::to_string(cls.size() - 1) +
                    " elements, so a support meeting it has at least 5 elements");
  r.notes.push_back("the Klein subgroup has 4 elements; a support inside it of total dimension "
                    "5 needs a component of dimension 2 (informational)");
  return r;
}

std::vector<ElementSet> closed_supports(const FiniteGroup& g) {
  std::vector<ElementSet> out;
  for_each_closed_support(g, g.order(), [&](const ElementSet& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ScannedSupport> scan_supports(const FiniteGroup& g, unsigned total) {
  if (total < 1 || total > g.order())
    throw InputError("total must lie in 1.." + std::to_string(g.order()));
  // a non-owning handle: problems built here never outlive g
  const GroupPtr handle(std::shared_ptr<const FiniteGroup>{}, &g);
  std::vector<ScannedSupport> out;
  for_each_closed_support(g, total, [&](const ElementSet& s) {
    if (s.size() != total)
      return;
    out.push_back({s, support_obstruction(unit_dimension_problem(handle, s))});
  });
  std::sort(out.begin(), out.end(),
            [](const ScannedSupport& a, const ScannedSupport& b) { return a.support < b.support; });
  return out;
}

} // namespace hopf
