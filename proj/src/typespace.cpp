#include "hopf/typespace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>

#include "hopf/errors.hpp"

namespace hopf {

CoalgebraType::CoalgebraType(unsigned grouplikes, std::vector<DegreeCount> entries)
    : n_(grouplikes) {
  if (grouplikes == 0)
    throw InputError("a coalgebra type needs at least one group-like (n >= 1)");
  std::sort(entries.begin(), entries.end());
  for (const DegreeCount& e : entries) {
    if (e.degree < 2)
      throw InputError("matrix coalgebra degrees must be >= 2, got " + std::to_string(e.degree));
    if (e.count == 0)
      continue;
    if (!entries_.empty() && entries_.back().degree == e.degree)
      entries_.back().count += e.count;
    else
      entries_.push_back(e);
  }
}

unsigned CoalgebraType::count_of(unsigned degree) const {
  if (degree == 1)
    return n_;
  for (const DegreeCount& e : entries_)
    if (e.degree == degree)
      return e.count;
  return 0;
}

std::string CoalgebraType::to_string() const {
  std::string s = "(1, " + std::to_string(n_);
  for (const DegreeCount& e : entries_)
    s += "; " + std::to_string(e.degree) + ", " + std::to_string(e.count);
  return s + ")";
}

CoalgebraType parse_coalgebra_type(std::string_view text) {
  std::vector<unsigned> nums;
  std::vector<char> seps;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&] { return InputError("malformed coalgebra type '" + std::string(text) + "'"); };
  skip_ws();
  if (i == text.size() || text[i] != '(')
    throw fail();
  ++i;
  for (;;) {
    skip_ws();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw fail();
    i = std::size_t(ptr - text.data());
    nums.push_back(v);
    skip_ws();
    if (i == text.size())
      throw fail();
    char c = text[i++];
    if (c == ')')
      break;
    if (c != ',' && c != ';')
      throw fail();
    seps.push_back(c);
  }
  skip_ws();
  if (i != text.size() || nums.size() % 2 != 0 || nums[0] != 1)
    throw fail();
  for (std::size_t k = 0; k < seps.size(); ++k)
    if (seps[k] != (k % 2 == 0 ? ',' : ';'))
      throw fail();
  std::vector<DegreeCount> entries;
  for (std::size_t k = 2; k < nums.size(); k += 2) {
    if (nums[k + 1] == 0)
      throw fail();
    entries.push_back({nums[k], nums[k + 1]});
  }
  return CoalgebraType(nums[1], std::move(entries));
}

unsigned dimension(const CoalgebraType& t) {
  unsigned dim = t.grouplikes();
  for (const DegreeCount& e : t.entries())
    dim += e.count * e.degree * e.degree;
  return dim;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

std::vector<CoalgebraType> enumerate_raw(unsigned N) {
  if (N < 1 || N > kMaxDimension)
    throw InputError("dimension must lie in 1.." + std::to_string(kMaxDimension) + ", got " +
                     std::to_string(N));
  std::vector<CoalgebraType> out;
  for (unsigned n : divisors(N)) {
    std::vector<CoalgebraType> level;
    std::vector<DegreeCount> acc;
    // descend over degrees, dropping any count that breaks n | count*d^2
    std::function<void(unsigned, unsigned)> descend = [&](unsigned d, unsigned rem) {
      if (rem == 0) {
        level.emplace_back(n, acc);
        return;
      }
      const unsigned sq = d * d;
      if (sq > rem)
        return;
      for (unsigned c = 0; c * sq <= rem; ++c) {
        if (c > 0 && (c * sq) % n != 0)
          continue;
        if (c > 0)
          acc.push_back({d, c});
        descend(d + 1, rem - c * sq);
        if (c > 0)
          acc.pop_back();
      }
    };
    descend(2, N - n);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<unsigned> OrbitConfig::stabilizer_orders(unsigned grouplikes) const {
  std::vector<unsigned> s;
  for (unsigned o : orbit_sizes)
    s.push_back(grouplikes / o);
  return s;
}

std::vector<OrbitConfig> orbit_configs(const CoalgebraType& t, unsigned d) {
  const unsigned nd = d >= 2 ? t.count_of(d) : 0;
  if (nd == 0)
    throw InputError("degree " + std::to_string(d) + " does not occur in " + t.to_string());
  const unsigned n = t.grouplikes();
  std::vector<unsigned> sizes;
  for (unsigned o : divisors(n))
    if ((d * d) % (n / o) == 0)
      sizes.push_back(o);
  std::reverse(sizes.begin(), sizes.end());

  std::vector<OrbitConfig> out;
  std::vector<unsigned> acc;
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned rem) {
    if (rem == 0) {
      out.push_back({d, acc});
      return;
    }
    if (k == sizes.size())
      return;
    const unsigned o = sizes[k];
    for (unsigned m = rem / o + 1; m-- > 0;) {
      acc.insert(acc.end(), m, o);
      fill(k + 1, rem - m * o);
      acc.resize(acc.size() - m);
    }
  };
  fill(0, nd);
  return out;
}

std::vector<unsigned> feasible_stabilizer_orders(const CoalgebraType& t, unsigned d) {
  std::set<unsigned> s;
  for (const OrbitConfig& c : orbit_configs(t, d))
    for (unsigned x : c.stabilizer_orders(t.grouplikes()))
      s.insert(x);
  return {s.begin(), s.end()};
}

} // namespace hopf
