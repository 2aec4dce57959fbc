#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopf/errors.hpp"
#include "hopf/graded_support.hpp"

using namespace hopf;
using V = Obstruction::Verdict;

namespace {

bool is_closed(const FiniteGroup& g, const ElementSet& s) {
  for (Element x : s)
    for (Element h = 0; h < g.order(); ++h)
      if (!std::binary_search(s.begin(), s.end(), g.conjugate(x, h)))
        return false;
  return true;
}

ElementSet with_identity(ElementSet s) {
  s.push_back(0);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

} // namespace

TEST_CASE("conjugation_closure") {
  auto d5 = build_group(GroupSpec::dihedral(5));
  CHECK(conjugation_closure(*d5, {0}) == ElementSet{0});
  CHECK(conjugation_closure(*d5, {7}) == ElementSet{0, 5, 6, 7, 8, 9});
  CHECK_THROWS_AS(conjugation_closure(*d5, {}), InputError);

  auto a4 = build_group(GroupSpec::alternating(4));
  const ElementSet c = conjugation_closure(*a4, {a4->find("(1 2 3)")});
  CHECK(c.size() == 5);
  CHECK(is_closed(*a4, c));
}

TEST_CASE("support_obstruction examples") {
  auto d5 = build_group(GroupSpec::dihedral(5));
  const Obstruction refl = support_obstruction(unit_dimension_problem(d5, {0, 5, 6, 7, 8, 9}));
  CHECK(refl.verdict == V::ImpossibleUnitClash);
  CHECK(refl.pairs.size() == 25);
  CHECK(verify_witness(*d5, {0, 5, 6, 7, 8, 9}, refl));

  auto a4 = build_group(GroupSpec::alternating(4));
  const ElementSet cls = conjugation_closure(*a4, {a4->find("(1 2 3)")});
  const Obstruction nil = support_obstruction(unit_dimension_problem(a4, cls));
  CHECK(nil.verdict == V::ImpossibleNilpotent);
  CHECK(nil.pairs.size() == 16);
  CHECK(verify_witness(*a4, cls, nil));

  for (const char* s : {"C1", "C5", "D5", "A4", "S4"}) {
    auto g = build_group(parse_group_spec(s));
    CHECK(support_obstruction(unit_dimension_problem(g, {0})).verdict == V::Unknown);
  }

  // Rotations of D5 form a subgroup: products stay inside.
  CHECK(support_obstruction(unit_dimension_problem(d5, {0, 1, 2, 3, 4})).verdict == V::Unknown);

  // A single involution: |S*| = 1 is outside the unit-clash pattern.
  auto c2 = build_group(GroupSpec::cyclic(2));
  CHECK(support_obstruction(unit_dimension_problem(c2, {0, 1})).verdict == V::Unknown);
}

TEST_CASE("malformed problems are rejected") {
  auto d5 = build_group(GroupSpec::dihedral(5));
  CHECK_THROWS_AS(support_obstruction(unit_dimension_problem(d5, {5, 6, 7, 8, 9})), InputError);
  CHECK_THROWS_AS(support_obstruction(unit_dimension_problem(d5, {0, 5})), InputError);
  SupportProblem p = unit_dimension_problem(d5, {0, 5, 6, 7, 8, 9});
  p.dims[5] = 2;
  CHECK_THROWS_AS(support_obstruction(p), InputError);
  p.dims[5] = 1;
  p.dims[0] = 3;
  CHECK(support_obstruction(p).verdict == V::ImpossibleUnitClash);
  CHECK(p.total() == 8);
  p.dims.erase(6);
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("named theorems") {
  for (unsigned n = 3; n <= 15; n += 2) {
    CAPTURE(n);
    const TheoremResult r = theorem_dihedral(n);
    CHECK(r.holds);
    CHECK(r.verdict == "support ⊆ rotations");
    CHECK(r.failures.empty());
    REQUIRE_FALSE(r.checked.empty());
    for (const CheckedSupport& c : r.checked) {
      CHECK(c.obstruction.impossible());
      CHECK(c.witness_verified);
      CHECK(c.support.size() == n + 1);
    }
  }
  CHECK_THROWS_AS(theorem_dihedral(4), InputError);
  CHECK_THROWS_AS(theorem_dihedral(1), InputError);

  const TheoremResult a4 = theorem_a4();
  CHECK(a4.holds);
  CHECK(a4.verdict == "support ⊆ Klein");
  CHECK(a4.checked.size() == 2);
  for (const CheckedSupport& c : a4.checked) {
    CHECK(c.obstruction.verdict == V::ImpossibleNilpotent);
    CHECK(c.witness_verified);
  }
  CHECK_FALSE(a4.notes.empty());
}

TEST_CASE("scan_supports examples") {
  auto c3 = build_group(GroupSpec::cyclic(3));
  const auto s3 = scan_supports(*c3, 3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].support == ElementSet{0, 1, 2});
  CHECK(s3[0].obstruction.verdict == V::Unknown);

  auto d3 = build_group(GroupSpec::dihedral(3));
  const auto s4 = scan_supports(*d3, 4);
  CHECK(std::any_of(s4.begin(), s4.end(), [](const ScannedSupport& s) {
    return s.support == ElementSet{0, 3, 4, 5} && s.obstruction.verdict == V::ImpossibleUnitClash;
  }));

  auto a4 = build_group(GroupSpec::alternating(4));
  const auto s5 = scan_supports(*a4, 5);
  REQUIRE(s5.size() == 2);
  for (const ScannedSupport& s : s5)
    CHECK(s.obstruction.verdict == V::ImpossibleNilpotent);

  CHECK_THROWS_AS(scan_supports(*a4, 0), InputError);
  CHECK_THROWS_AS(scan_supports(*a4, 13), InputError);
}

TEST_CASE("scanned supports are closed and witnesses re-verify") {
  for (const char* s : {"C6", "V4", "D3", "D4", "D5", "D6", "A4", "S4"}) {
    CAPTURE(s);
    auto g = build_group(parse_group_spec(s));
    for (unsigned total = 1; total <= g->order(); ++total) {
      const auto scans = scan_supports(*g, total);
      CHECK(std::is_sorted(scans.begin(), scans.end(),
                           [](const auto& a, const auto& b) { return a.support < b.support; }));
      for (const ScannedSupport& sc : scans) {
        CHECK(sc.support.size() == total);
        CHECK(sc.support.front() == 0);
        CHECK(is_closed(*g, sc.support));
        CHECK(verify_witness(*g, sc.support, sc.obstruction));
        CHECK(support_obstruction(unit_dimension_problem(g, sc.support)).pairs == sc.obstruction.pairs);
      }
    }
  }
}

TEST_CASE("tampered witnesses fail verification") {
  auto d5 = build_group(GroupSpec::dihedral(5));
  const ElementSet s{0, 5, 6, 7, 8, 9};
  Obstruction o = support_obstruction(unit_dimension_problem(d5, s));
  REQUIRE(verify_witness(*d5, s, o));
  Obstruction wrong_product = o;
  wrong_product.pairs[1].product = 0;
  CHECK_FALSE(verify_witness(*d5, s, wrong_product));
  Obstruction missing = o;
  missing.pairs.pop_back();
  CHECK_FALSE(verify_witness(*d5, s, missing));
  Obstruction relabeled = o;
  relabeled.verdict = V::ImpossibleNilpotent;
  CHECK_FALSE(verify_witness(*d5, s, relabeled));
}

TEST_CASE("monotonicity over supports with a non-identity element") {
  for (const char* name : {"D5", "A4"}) {
    CAPTURE(name);
    auto g = build_group(parse_group_spec(name));
    const auto supports = closed_supports(*g);
    for (const ElementSet& small : supports) {
      if (small.size() < 2)
        continue;
      const bool small_possible = !support_obstruction(unit_dimension_problem(g, small)).impossible();
      if (!small_possible)
        continue;
      for (const ElementSet& big : supports) {
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
          continue;
        CAPTURE(big.size());
        CHECK_FALSE(support_obstruction(unit_dimension_problem(g, big)).impossible());
      }
    }
  }
}

TEST_CASE("closed_supports") {
  auto d5 = build_group(GroupSpec::dihedral(5));
  CHECK(closed_supports(*d5).size() == 8);  // 2^3 unions of the non-identity classes
  for (const ElementSet& s : closed_supports(*d5))
    CHECK(is_closed(*d5, with_identity(s)));
}
