#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "hopf/chartables.hpp"
#include "hopf/errors.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

const std::vector<std::string> kAudited = {"C1", "C2", "C3", "C5", "C6", "V4", "D3", "D4", "D5",
                                           "D6", "A4", "S4", "A5", "D3xD5", "A4xC2"};

std::vector<unsigned> degrees(const CharacterTable& ct) {
  std::vector<unsigned> d;
  for (const Irrep& r : ct.irreps)
    d.push_back(r.degree);
  return d;
}

std::vector<Label> labels_of_degree(const FusionTable& t, unsigned d) {
  std::vector<Label> out;
  for (Label i = 0; i < t.size(); ++i)
    if (t.degree(i) == d)
      out.push_back(i);
  return out;
}

Label find_label(const FusionTable& t, const std::string& name) {
  for (Label i = 0; i < t.size(); ++i)
    if (t.label(i).name == name)
      return i;
  FAIL("no label " << name);
  return 0;
}

std::vector<std::complex<double>> per_element(const CharacterTable& ct, std::size_t irrep) {
  std::vector<std::complex<double>> v;
  for (Element g = 0; g < ct.group->order(); ++g)
    v.push_back(ct.value(irrep, g));
  return v;
}

bool close(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-9)
      return false;
  return true;
}

} // namespace

TEST_CASE("character table degrees") {
  CHECK(degrees(character_table(GroupSpec::cyclic(2))) == std::vector<unsigned>{1, 1});
  CHECK(degrees(character_table(GroupSpec::dihedral(5))) == std::vector<unsigned>{1, 1, 2, 2});
  CHECK(degrees(character_table(GroupSpec::alternating(5))) ==
        std::vector<unsigned>{1, 3, 3, 4, 5});
  CHECK(degrees(character_table(GroupSpec::symmetric(4))) ==
        std::vector<unsigned>{1, 1, 2, 3, 3});
  CHECK(degrees(character_table(GroupSpec::dihedral(6))) ==
        std::vector<unsigned>{1, 1, 1, 1, 2, 2});
  CHECK_THROWS_AS(character_table(GroupSpec::symmetric(5)), InputError);
  CHECK_THROWS_WITH(character_table(GroupSpec::symmetric(5)), doctest::Contains("A4"));
}

TEST_CASE("dihedral characters match 2x2 matrix traces") {
  for (unsigned m : {3u, 4u, 5u, 6u, 7u}) {
    CAPTURE(m);
    const CharacterTable ct = character_table(GroupSpec::dihedral(m));
    std::vector<std::vector<std::complex<double>>> expected;
    for (unsigned h = 1; 2 * h < m; ++h)
      expected.push_back(oracle::dihedral_matrix_traces(m, h));
    std::size_t matched = 0;
    for (std::size_t i = 0; i < ct.irreps.size(); ++i) {
      if (ct.irreps[i].degree != 2)
        continue;
      const auto v = per_element(ct, i);
      CHECK(std::any_of(expected.begin(), expected.end(), [&](const auto& e) { return close(e, v); }));
      ++matched;
    }
    CHECK(matched == expected.size());
  }
}

TEST_CASE("A4 and S4 permutation characters") {
  for (bool alt : {true, false}) {
    const CharacterTable ct =
        character_table(alt ? GroupSpec::alternating(4) : GroupSpec::symmetric(4));
    const auto perms = oracle::permutations(4, alt);
    REQUIRE(perms.size() == ct.group->order());
    std::vector<std::complex<double>> standard;
    for (const auto& p : perms)
      standard.emplace_back(oracle::fixed_points(p) - 1, 0.0);
    bool found = false;
    for (std::size_t i = 0; i < ct.irreps.size(); ++i)
      found = found || close(per_element(ct, i), standard);
    CHECK(found);
  }
}

TEST_CASE("fusion of k^D5") {
  const FusionTable t = fusion_dual_group(GroupSpec::dihedral(5));
  const Label sgn = find_label(t, "sgn");
  const auto two = labels_of_degree(t, 2);
  REQUIRE(two.size() == 2);
  for (Label chi : two) {
    const Label other = chi == two[0] ? two[1] : two[0];
    RingElement expected = RingElement::basis(0);
    expected.add(sgn, 1);
    expected.add(other, 1);
    CHECK(decompose_product(t, RingElement::basis(chi), RingElement::basis(t.dual(chi))) == expected);
    CHECK(stabilizer_G(t, chi).size() == 2);
  }

  // The same multiplicities from the matrix-trace oracle.
  const auto r1 = oracle::dihedral_matrix_traces(5, 1);
  const auto r2 = oracle::dihedral_matrix_traces(5, 2);
  std::vector<std::complex<double>> triv(10, 1.0), sg;
  for (int g = 0; g < 10; ++g)
    sg.emplace_back(g < 5 ? 1.0 : -1.0, 0.0);
  CHECK(oracle::multiplicity(r1, r1, triv) == doctest::Approx(1.0));
  CHECK(oracle::multiplicity(r1, r1, sg) == doctest::Approx(1.0));
  CHECK(oracle::multiplicity(r1, r1, r2) == doctest::Approx(1.0));
  CHECK(oracle::multiplicity(r1, r1, r1) == doctest::Approx(0.0));
}

TEST_CASE("fusion of k^A4") {
  const FusionTable t = fusion_dual_group(GroupSpec::alternating(4));
  const auto three = labels_of_degree(t, 3);
  REQUIRE(three.size() == 1);
  const Label lambda = three[0];
  CHECK(t.dual(lambda) == lambda);
  const RingElement sq = decompose_product(t, RingElement::basis(lambda), RingElement::basis(lambda));
  CHECK(sq.degree(t) == 9);
  CHECK(sq.coeff(lambda) == 2);
  for (Label g : labels_of_degree(t, 1))
    CHECK(sq.coeff(g) == 1);
  CHECK(stabilizer_G(t, lambda).size() == 3);

  // <lambda^2, lambda> from the fixed-point character.
  std::vector<std::complex<double>> std_char;
  for (const auto& p : oracle::permutations(4, true))
    std_char.emplace_back(oracle::fixed_points(p) - 1, 0.0);
  CHECK(oracle::multiplicity(std_char, std_char, std_char) == doctest::Approx(2.0));
}

TEST_CASE("fusion of k^A5") {
  const FusionTable t = fusion_dual_group(GroupSpec::alternating(5));
  CHECK(labels_of_degree(t, 2).empty());
  for (Label chi : labels_of_degree(t, 3))
    CHECK(stabilizer_G(t, chi) == std::vector<Label>{0});
}

TEST_CASE("group algebra fusion") {
  const FusionTable c3 = fusion_group_algebra(GroupSpec::cyclic(3));
  CHECK(c3.mult(2, 1, 1) == 1);
  CHECK(c3.mult(0, 1, 1) == 0);

  const FusionTable d5 = fusion_group_algebra(GroupSpec::dihedral(5));
  auto g = build_group(GroupSpec::dihedral(5));
  for (Label s = 5; s < 10; ++s) {
    CHECK(d5.mult(0, s, s) == 1);
    CHECK(d5.dual(s) == s);
  }
  // (1 + x + y)^2 for distinct reflections x, y.
  RingElement a = RingElement::basis(0);
  a.add(5, 1);
  a.add(7, 1);
  const RingElement sq = decompose_product(d5, a, a);
  CHECK(sq.coeff(0) == 3);
  CHECK(sq.degree(d5) == 9);
  CHECK(sq.coeff(g->multiply(5, 7)) == 1);
  CHECK(sq.coeff(g->multiply(7, 5)) == 1);
  RingElement b = RingElement::basis(5);
  b.add(7, 1);
  CHECK(decompose_product(d5, b, b).coeff(0) == 2);

  CHECK(coalgebra_type_of(fusion_group_algebra(GroupSpec::cyclic(60))) == CoalgebraType(60, {}));
}

TEST_CASE("decompose_product") {
  const FusionTable t = fusion_dual_group(GroupSpec::symmetric(4));
  for (Label x = 0; x < t.size(); ++x)
    CHECK(decompose_product(t, RingElement::basis(0), RingElement::basis(x)) == RingElement::basis(x));
  for (Label x = 0; x < t.size(); ++x)
    for (Label y = 0; y < t.size(); ++y)
      CHECK(decompose_product(t, RingElement::basis(x), RingElement::basis(y)).degree(t) ==
            t.degree(x) * t.degree(y));
  CHECK_THROWS_AS(decompose_product(t, RingElement::basis(99), RingElement::basis(0)), InputError);
  CHECK(to_string(t, RingElement()) == "0");
}

TEST_CASE("coalgebra types of the dual group algebras") {
  CHECK(coalgebra_type_of(fusion_dual_group(GroupSpec::alternating(5))) ==
        CoalgebraType(1, {{3, 2}, {4, 1}, {5, 1}}));
  CHECK(coalgebra_type_of(fusion_dual_group(GroupSpec::alternating(4))) == CoalgebraType(3, {{3, 1}}));
  CHECK(coalgebra_type_of(fusion_dual_group(GroupSpec::dihedral(5))) == CoalgebraType(2, {{2, 2}}));
  CHECK(coalgebra_type_of(fusion_dual_group(GroupSpec::dihedral(3))) == CoalgebraType(2, {{2, 1}}));
  CHECK(coalgebra_type_of(fusion_dual_group(parse_group_spec("D3xD5"))) ==
        CoalgebraType(4, {{2, 6}, {4, 2}}));
}

TEST_CASE("every bundled table passes the audit") {
  for (const std::string& s : kAudited) {
    CAPTURE(s);
    const GroupSpec spec = parse_group_spec(s);
    const DualFusionResult dual = fusion_dual_group_audited(spec);
    CHECK(dual.max_rounding_residue < 1e-6);
    for (const FusionTable* t : {&dual.table}) {
      const FusionAudit a = audit_fusion_table(*t);
      CHECK(a.ok());
      CHECK(a.adjunction.empty());
      CHECK(a.associativity.empty());
      CHECK(dimension(coalgebra_type_of(*t)) == spec.order());
    }
    const FusionTable ga = fusion_group_algebra(spec);
    CHECK(audit_fusion_table(ga).ok());
    CHECK(dimension(coalgebra_type_of(ga)) == spec.order());

    const std::size_t grouplikes = labels_of_degree(dual.table, 1).size();
    for (Label chi = 0; chi < dual.table.size(); ++chi) {
      const std::size_t s_order = stabilizer_G(dual.table, chi).size();
      CHECK((dual.table.degree(chi) * dual.table.degree(chi)) % s_order == 0);
      CHECK(grouplikes % s_order == 0);
    }
  }
}

TEST_CASE("the audit catches a broken table") {
  // Z2 with g*g = g instead of 1.
  std::vector<FusionLabel> labels{{"1", 1, 0}, {"g", 1, 1}};
  std::vector<unsigned> mult(8, 0);
  auto at = [](Label k, Label i, Label j) { return (k * 2 + i) * 2 + j; };
  mult[at(0, 0, 0)] = 1;
  mult[at(1, 0, 1)] = 1;
  mult[at(1, 1, 0)] = 1;
  mult[at(1, 1, 1)] = 1;
  const FusionTable broken(labels, mult, FusionTable::Origin::Synthetic, "");
  const FusionAudit a = audit_fusion_table(broken);
  CHECK_FALSE(a.ok());
  CHECK_FALSE(a.duality.empty());

  CHECK_THROWS_AS(FusionTable(labels, std::vector<unsigned>(3, 0), FusionTable::Origin::Synthetic, ""),
                  InputError);
}
