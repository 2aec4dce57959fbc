#include "hopf/chartables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

using cplx = std::complex<double>;

// A character listed element by element, before it is folded onto classes.
struct ElementCharacter {
  std::string name;
  unsigned degree = 1;
  std::vector<cplx> values;
};

cplx root_of_unity(long long num, long long den) {
  const double a = 2.0 * std::numbers::pi * double(num % den) / double(den);
  return {std::cos(a), std::sin(a)};
}

std::vector<ElementCharacter> cyclic_characters(unsigned n) {
  std::vector<ElementCharacter> out;
  for (unsigned j = 0; j < n; ++j) {
    ElementCharacter c{j == 0 ? "1" : (j == 1 ? "w" : "w^" + std::to_string(j)), 1, {}};
    for (unsigned k = 0; k < n; ++k)
      c.values.push_back(root_of_unity((long long)j * k, n));
    out.push_back(std::move(c));
  }
  return out;
}

// Element k < n is r^k, element n + k is s r^k.
std::vector<ElementCharacter> dihedral_characters(unsigned n) {
  std::vector<ElementCharacter> out;
  auto linear = [&](const char* name, int rot_sign, int refl_sign) {
    ElementCharacter c{name, 1, {}};
    for (unsigned e = 0; e < 2 * n; ++e) {
      const unsigned k = e % n;
      double v = (rot_sign < 0 && k % 2 == 1) ? -1.0 : 1.0;
      if (e >= n)
        v *= refl_sign;
      c.values.emplace_back(v, 0.0);
    }
    out.push_back(std::move(c));
  };
  linear("1", 1, 1);
  linear("sgn", 1, -1);
  if (n % 2 == 0) {
    linear("eps", -1, 1);
    linear("eps'", -1, -1);
  }
  for (unsigned h = 1; 2 * h < n; ++h) {
    ElementCharacter c{"rho" + std::to_string(h), 2, {}};
    for (unsigned e = 0; e < 2 * n; ++e) {
      if (e >= n)
        c.values.emplace_back(0.0, 0.0);
      else
        c.values.emplace_back(2.0 * std::cos(2.0 * std::numbers::pi * double(h * e % n) / n), 0.0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ElementCharacter> klein_characters() {
  std::vector<ElementCharacter> out{{"1", 1, {1.0, 1.0, 1.0, 1.0}}};
  for (unsigned x = 1; x < 4; ++x) {
    ElementCharacter c{"k" + std::to_string(x), 1, {}};
    for (unsigned y = 0; y < 4; ++y)
      c.values.emplace_back(y == 0 || y == x ? 1.0 : -1.0, 0.0);
    out.push_back(std::move(c));
  }
  return out;
}

// Classical tables of A4, S4 and A5. Columns are picked per element from its
// order, its fixed points and (for the split classes) its class relative to
// a reference element.
struct StoredTable {
  std::vector<std::string> names;
  std::vector<unsigned> degrees;
  std::vector<std::vector<cplx>> rows;
};

std::size_t fixed_points(const std::string& cycle_label, unsigned points) {
  if (cycle_label == "1")
    return points;
  std::size_t moved = 0;
  for (char ch : cycle_label)
    if (ch >= '1' && ch <= '9')
      ++moved;
  return points - moved;
}

std::vector<ElementCharacter> stored_characters(const FiniteGroup& g, const StoredTable& table,
                                                const std::vector<std::size_t>& column) {
  std::vector<ElementCharacter> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    ElementCharacter c{table.names[r], table.degrees[r], {}};
    for (Element e = 0; e < g.order(); ++e)
      c.values.push_back(table.rows[r][column[e]]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ElementCharacter> a4_characters(const FiniteGroup& g) {
  const cplx w = root_of_unity(1, 3);
  const StoredTable t{{"1", "1'", "1''", "3"},
                      {1, 1, 1, 3},
                      {{1.0, 1.0, 1.0, 1.0},
                       {1.0, 1.0, w, w * w},
                       {1.0, 1.0, w * w, w},
                       {3.0, -1.0, 0.0, 0.0}}};
  const ConjugacyClassPartition cls = conjugacy_classes(g);
  const Element c = g.find("(1 2 3)");
  std::vector<std::size_t> col(g.order());
  for (Element e = 0; e < g.order(); ++e) {
    switch (element_order(g, e)) {
      case 1: col[e] = 0; break;
      case 2: col[e] = 1; break;
      default: col[e] = cls.class_of[e] == cls.class_of[c] ? 2 : 3;
    }
  }
  return stored_characters(g, t, col);
}

std::vector<ElementCharacter> s4_characters(const FiniteGroup& g) {
  // columns: 1, (12), (12)(34), (123), (1234)
  const StoredTable t{{"1", "sgn", "2", "3", "3'"},
                      {1, 1, 2, 3, 3},
                      {{1.0, 1.0, 1.0, 1.0, 1.0},
                       {1.0, -1.0, 1.0, 1.0, -1.0},
                       {2.0, 0.0, 2.0, -1.0, 0.0},
                       {3.0, 1.0, -1.0, 0.0, -1.0},
                       {3.0, -1.0, -1.0, 0.0, 1.0}}};
  std::vector<std::size_t> col(g.order());
  for (Element e = 0; e < g.order(); ++e) {
    switch (element_order(g, e)) {
      case 1: col[e] = 0; break;
      case 2: col[e] = fixed_points(g.label(e), 4) == 2 ? 1 : 2; break;
      case 3: col[e] = 3; break;
      default: col[e] = 4;
    }
  }
  return stored_characters(g, t, col);
}

std::vector<ElementCharacter> a5_characters(const FiniteGroup& g) {
  // columns: 1, (12)(34), (123), class of (12345), class of its square
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const StoredTable t{{"1", "3", "3'", "4", "5"},
                      {1, 3, 3, 4, 5},
                      {{1.0, 1.0, 1.0, 1.0, 1.0},
                       {3.0, -1.0, 0.0, phi, 1.0 - phi},
                       {3.0, -1.0, 0.0, 1.0 - phi, phi},
                       {4.0, 0.0, 1.0, -1.0, -1.0},
                       {5.0, 1.0, -1.0, 0.0, 0.0}}};
  const ConjugacyClassPartition cls = conjugacy_classes(g);
  const Element c = g.find("(1 2 3 4 5)");
  std::vector<std::size_t> col(g.order());
  for (Element e = 0; e < g.order(); ++e) {
    switch (element_order(g, e)) {
      case 1: col[e] = 0; break;
      case 2: col[e] = 1; break;
      case 3: col[e] = 2; break;
      default: col[e] = cls.class_of[e] == cls.class_of[c] ? 3 : 4;
    }
  }
  return stored_characters(g, t, col);
}

[[noreturn]] void unsupported(const GroupSpec& spec) {
  throw InputError("no character table for " + spec.to_string() +
                   "; supported: C<n>, D<n>, V4, A4, S4, A5 and direct products of these");
}

std::vector<ElementCharacter> element_characters(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  switch (spec.family) {
    case F::Cyclic: return cyclic_characters(spec.n);
    case F::Dihedral: return dihedral_characters(spec.n);
    case F::Klein: return klein_characters();
    case F::Alternating:
      if (spec.n == 4)
        return a4_characters(FiniteGroup(spec));
      if (spec.n == 5)
        return a5_characters(FiniteGroup(spec));
      unsupported(spec);
    case F::Symmetric:
      if (spec.n == 4)
        return s4_characters(FiniteGroup(spec));
      unsupported(spec);
    case F::Product: {
      const auto left = element_characters(spec.factors[0]);
      const auto right = element_characters(spec.factors[1]);
      const std::size_t nb = spec.factors[1].order();
      std::vector<ElementCharacter> out;
      for (const auto& a : left)
        for (const auto& b : right) {
          ElementCharacter c{a.name + "⊗" + b.name, a.degree * b.degree, {}};
          for (std::size_t e = 0; e < a.values.size() * nb; ++e)
            c.values.push_back(a.values[e / nb] * b.values[e % nb]);
          out.push_back(std::move(c));
        }
      return out;
    }
  }
  unsupported(spec);
}

void require(bool cond, const std::string& what) {
  if (!cond)
    throw InternalError(what);
}

} // namespace

CharacterTable character_table(const GroupSpec& spec) {
  CharacterTable t;
  t.group = build_group(spec);
  std::vector<ElementCharacter> chars = element_characters(spec);
  t.classes = conjugacy_classes(*t.group);
  std::stable_sort(chars.begin(), chars.end(),
                   [](const ElementCharacter& a, const ElementCharacter& b) {
                     return a.degree < b.degree;
                   });

  const std::string where = "character table of " + spec.to_string() + ": ";
  for (const ElementCharacter& c : chars) {
    Irrep irrep{c.name, c.degree, {}};
    for (const ElementSet& cls : t.classes.classes) {
      const cplx v = c.values[cls.front()];
      for (Element e : cls)
        require(std::abs(c.values[e] - v) < 1e-9, where + c.name + " is not a class function");
      irrep.values.push_back(v);
    }
    require(std::abs(irrep.values[0] - double(c.degree)) < 1e-9,
            where + c.name + " has the wrong degree");
    t.irreps.push_back(std::move(irrep));
  }

  const double order = double(t.group->order());
  require(t.irreps.size() == t.classes.size(), where + "irreps and classes differ in number");
  std::size_t sum_sq = 0;
  for (const Irrep& r : t.irreps)
    sum_sq += std::size_t(r.degree) * r.degree;
  require(sum_sq == t.group->order(), where + "squared degrees do not sum to |G|");
  for (std::size_t i = 0; i < t.irreps.size(); ++i)
    for (std::size_t j = 0; j < t.irreps.size(); ++j) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < t.classes.size(); ++c)
        s += double(t.classes.classes[c].size()) * t.irreps[i].values[c] *
             std::conj(t.irreps[j].values[c]);
      require(std::abs(s / order - (i == j ? 1.0 : 0.0)) < 1e-9,
              where + "rows " + t.irreps[i].name + ", " + t.irreps[j].name + " not orthonormal");
    }
  return t;
}

FusionTable::FusionTable(std::vector<FusionLabel> labels, std::vector<unsigned> mult,
                         Origin origin, std::string source)
    : labels_(std::move(labels)), mult_(std::move(mult)), origin_(origin),
      source_(std::move(source)) {
  const std::size_t L = labels_.size();
  if (L == 0 || mult_.size() != L * L * L)
    throw InputError("fusion table has inconsistent dimensions");
}

void FusionTable::check_label(Label i) const {
  if (i >= labels_.size())
    throw InputError("label " + std::to_string(i) + " is not in the fusion table (" +
                     std::to_string(labels_.size()) + " labels)");
}

std::string to_string(FusionTable::Origin origin) {
  switch (origin) {
    case FusionTable::Origin::GroupAlgebra: return "group-algebra";
    case FusionTable::Origin::DualGroupAlgebra: return "dual-group-algebra";
    case FusionTable::Origin::Synthetic: return "synthetic";
  }
  return "?";
}

DualFusionResult fusion_dual_group_audited(const GroupSpec& spec) {
  const CharacterTable ct = character_table(spec);
  const std::size_t L = ct.irreps.size();
  const std::size_t C = ct.classes.size();
  const double order = double(ct.group->order());
  std::vector<unsigned> mult(L * L * L, 0);
  double worst = 0.0;
  std::vector<cplx> prod(C);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      for (std::size_t c = 0; c < C; ++c)
        prod[c] = double(ct.classes.classes[c].size()) * ct.irreps[i].values[c] *
                  ct.irreps[j].values[c];
      for (std::size_t k = 0; k < L; ++k) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < C; ++c)
          s += prod[c] * std::conj(ct.irreps[k].values[c]);
        s /= order;
        const double nearest = std::round(s.real());
        const double residue = std::abs(s - nearest);
        worst = std::max(worst, residue);
        if (residue >= 1e-6 || nearest < 0.0)
          throw InternalError("structure constant N(" + ct.irreps[k].name + "; " +
                              ct.irreps[i].name + ", " + ct.irreps[j].name + ") of " +
                              spec.to_string() + " is not a nonnegative integer");
        mult[(k * L + i) * L + j] = unsigned(nearest);
      }
    }

  std::vector<FusionLabel> labels;
  for (std::size_t i = 0; i < L; ++i) {
    FusionLabel fl{ct.irreps[i].name, ct.irreps[i].degree, L};
    for (std::size_t j = 0; j < L; ++j)
      if (mult[(0 * L + i) * L + j] == 1) {
        require(fl.dual == L, "dual of " + fl.name + " is not unique");
        fl.dual = j;
      }
    require(fl.dual < L, "no dual for " + fl.name);
    labels.push_back(std::move(fl));
  }
  return {FusionTable(std::move(labels), std::move(mult), FusionTable::Origin::DualGroupAlgebra,
                      spec.to_string()),
          worst};
}

FusionTable fusion_dual_group(const GroupSpec& spec) {
  return fusion_dual_group_audited(spec).table;
}

FusionTable fusion_group_algebra(const GroupSpec& spec) {
  const GroupPtr g = build_group(spec);
  const std::size_t L = g->order();
  std::vector<unsigned> mult(L * L * L, 0);
  std::vector<FusionLabel> labels;
  for (Element i = 0; i < L; ++i) {
    labels.push_back({g->label(i), 1, g->inverse(i)});
    for (Element j = 0; j < L; ++j)
      mult[(std::size_t(g->multiply(i, j)) * L + i) * L + j] = 1;
  }
  return FusionTable(std::move(labels), std::move(mult), FusionTable::Origin::GroupAlgebra,
                     spec.to_string());
}

RingElement RingElement::basis(Label i, unsigned coeff) {
  RingElement r;
  r.add(i, coeff);
  return r;
}

unsigned RingElement::coeff(Label i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add(Label i, unsigned coeff) {
  if (coeff != 0)
    terms_[i] += coeff;
}

unsigned RingElement::degree(const FusionTable& t) const {
  unsigned d = 0;
  for (auto [label, c] : terms_) {
    t.check_label(label);
    d += c * t.degree(label);
  }
  return d;
}

RingElement decompose_product(const FusionTable& t, const RingElement& a, const RingElement& b) {
  for (const auto& [label, c] : a.terms())
    t.check_label(label);
  for (const auto& [label, c] : b.terms())
    t.check_label(label);
  RingElement out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms())
      for (Label k = 0; k < t.size(); ++k)
        out.add(k, ci * cj * t.mult(k, i, j));
  return out;
}

std::string to_string(const FusionTable& t, const RingElement& x) {
  std::string s;
  for (const auto& [label, c] : x.terms()) {
    if (!s.empty())
      s += " + ";
    if (c != 1)
      s += std::to_string(c) + " ";
    s += t.label(label).name;
  }
  return s.empty() ? "0" : s;
}

std::vector<Label> stabilizer_G(const FusionTable& t, Label chi) {
  t.check_label(chi);
  std::vector<Label> by_multiplicity, by_action;
  for (Label g = 0; g < t.size(); ++g) {
    if (t.degree(g) != 1)
      continue;
    if (t.mult(g, chi, t.dual(chi)) > 0)
      by_multiplicity.push_back(g);
    if (t.mult(chi, g, chi) > 0)
      by_action.push_back(g);
  }
  if (by_multiplicity != by_action)
    throw InternalError("G[" + t.label(chi).name +
                        "] differs between the multiplicity and the action description");
  return by_multiplicity;
}

CoalgebraType coalgebra_type_of(const FusionTable& t) {
  unsigned n = 0;
  std::vector<DegreeCount> entries;
  for (const FusionLabel& l : t.labels()) {
    if (l.degree == 1)
      ++n;
    else
      entries.push_back({l.degree, 1});
  }
  return CoalgebraType(n, std::move(entries));
}

bool FusionAudit::ok() const {
  return degree_multiplicativity.empty() && unit.empty() && duality.empty() &&
         adjunction.empty() && stabilizer_multiplicity.empty() &&
         stabilizer_divisibility.empty() && associativity.empty();
}

FusionAudit audit_fusion_table(const FusionTable& t) {
  FusionAudit a;
  const std::size_t L = t.size();
  auto name = [&](Label x) { return t.label(x).name; };
  auto triple = [&](Label k, Label i, Label j) {
    return "(" + name(k) + "; " + name(i) + ", " + name(j) + ")";
  };
  auto note = [](std::string& slot, const std::string& msg) {
    if (slot.empty())
      slot = msg;
  };

  for (Label i = 0; i < L; ++i)
    for (Label j = 0; j < L; ++j) {
      unsigned d = 0;
      for (Label k = 0; k < L; ++k)
        d += t.mult(k, i, j) * t.degree(k);
      if (d != t.degree(i) * t.degree(j))
        note(a.degree_multiplicativity, "deg(" + name(i) + ")deg(" + name(j) + ") mismatch");
    }

  if (t.degree(0) != 1)
    note(a.unit, "label 0 has degree " + std::to_string(t.degree(0)));
  for (Label k = 0; k < L; ++k)
    for (Label j = 0; j < L; ++j) {
      const unsigned want = k == j ? 1 : 0;
      if (t.mult(k, 0, j) != want || t.mult(k, j, 0) != want)
        note(a.unit, "unit law fails at " + triple(k, 0, j));
    }

  for (Label i = 0; i < L; ++i) {
    if (t.dual(i) >= L || t.dual(t.dual(i)) != i || t.degree(t.dual(i)) != t.degree(i))
      note(a.duality, "dual of " + name(i) + " is not an involution");
    for (Label j = 0; j < L; ++j)
      if (t.mult(0, i, j) != (j == t.dual(i) ? 1u : 0u))
        note(a.duality, "N" + triple(0, i, j) + " = " + std::to_string(t.mult(0, i, j)));
  }
  if (!a.duality.empty())
    return a;  // the remaining laws are phrased through dual()

  for (Label k = 0; k < L; ++k)
    for (Label i = 0; i < L; ++i)
      for (Label j = 0; j < L; ++j) {
        const unsigned m = t.mult(k, i, j);
        if (m != t.mult(t.dual(i), j, t.dual(k)) || m != t.mult(i, k, t.dual(j)))
          note(a.adjunction, "N" + triple(k, i, j) + " breaks the adjunction symmetry");
      }

  std::size_t grouplikes = 0;
  for (Label g = 0; g < L; ++g)
    grouplikes += t.degree(g) == 1;
  for (Label chi = 0; chi < L; ++chi) {
    for (Label g = 0; g < L; ++g)
      if (t.degree(g) == 1 && t.mult(g, chi, t.dual(chi)) > 1)
        note(a.stabilizer_multiplicity, "N" + triple(g, chi, t.dual(chi)) + " > 1");
    try {
      const std::size_t s = stabilizer_G(t, chi).size();
      const std::size_t d2 = std::size_t(t.degree(chi)) * t.degree(chi);
      if (d2 % s != 0 || grouplikes % s != 0)
        note(a.stabilizer_divisibility, "|G[" + name(chi) + "]| = " + std::to_string(s));
    } catch (const InternalError& e) {
      note(a.stabilizer_divisibility, e.what());
    }
  }

  // sparse products make the quadruple check cheap for pointed tables
  std::vector<std::vector<std::pair<Label, unsigned>>> prod(L * L);
  for (Label i = 0; i < L; ++i)
    for (Label j = 0; j < L; ++j)
      for (Label k = 0; k < L; ++k)
        if (unsigned m = t.mult(k, i, j))
          prod[i * L + j].emplace_back(k, m);
  std::vector<long> lhs(L), rhs(L);
  for (Label i = 0; i < L && a.associativity.empty(); ++i)
    for (Label j = 0; j < L; ++j)
      for (Label l = 0; l < L; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (auto [m, c1] : prod[i * L + j])
          for (auto [k, c2] : prod[m * L + l])
            lhs[k] += long(c1) * c2;
        for (auto [m, c1] : prod[j * L + l])
          for (auto [k, c2] : prod[i * L + m])
            rhs[k] += long(c1) * c2;
        if (lhs != rhs)
          note(a.associativity, "(" + name(i) + " " + name(j) + ") " + name(l) + " differs");
      }
  return a;
}

} // namespace hopf
