#include "meander/algebra.hpp"

#include <algorithm>
#include <cstdlib>

#include "meander/errors.hpp"

namespace meander {

namespace {

std::vector<int> first_half(const std::vector<int>& c) { return {c.begin(), c.begin() + c.size() / 2}; }
std::vector<int> second_half(const std::vector<int>& c) { return {c.begin() + c.size() / 2, c.end()}; }

bool visits_all_once(const std::vector<int>& part, int n) {
  std::vector<char> seen(n + 1, 0);
  for (int v : part) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) return false;
    seen[a] = 1;
  }
  return static_cast<int>(part.size()) == n;
}

void check_signs(const GaussCode& g) {
  try {
    validate_gauss_code(g);
  } catch (const MalformedInput&) {
    throw DomainError("product is not a gauss code (a crossing is over or under twice): " + format_gauss_code(g));
  }
}

// Second part of an operand of the link product.
std::vector<int> link_operand(const GaussCode& g) {
  if (g.components.size() == 1) {
    const auto& c = g.components[0];
    int n = static_cast<int>(c.size()) / 2;
    if (!visits_all_once(first_half(c), n)) throw DomainError("operand is not an ordered code");
    return second_half(c);
  }
  if (g.components.size() == 2) {
    int n = g.crossing_count();
    if (!visits_all_once(g.components[0], n) || !visits_all_once(g.components[1], n))
      throw DomainError("two-component operand must have simple components crossing each other");
    return g.components[1];
  }
  throw DomainError("operand must be a knot or a two-component link");
}

}  // namespace

ChordDiagram chord_diagram(const GaussCode& g) {
  validate_gauss_code(g);
  if (g.components.size() != 1) throw DomainError("chord diagrams are defined for knots");
  const auto& c = g.components[0];
  ChordDiagram cd;
  cd.n = static_cast<int>(c.size()) / 2;
  cd.chords.assign(cd.n, {-1, -1});
  for (size_t i = 0; i < c.size(); ++i) {
    int a = std::abs(c[i]);
    cd.circle.push_back(a);
    if (c[i] > 0) cd.chords[a - 1].first = static_cast<int>(i);
    else cd.chords[a - 1].second = static_cast<int>(i);
  }
  return cd;
}

GaussCode gauss_from_chords(const ChordDiagram& cd) {
  std::vector<int> c(cd.circle.size());
  for (int k = 0; k < cd.n; ++k) {
    c[cd.chords[k].first] = k + 1;
    c[cd.chords[k].second] = -(k + 1);
  }
  GaussCode g;
  g.components.push_back(std::move(c));
  return g;
}

std::vector<int> axis_signs_of(const Diagram& d) {
  if (!d.layout() || d.layout()->permutation.empty()) throw DomainError("diagram is not a meander closure");
  const int n = d.crossing_count();
  const auto& axis = d.gauss().components[0];
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(axis[i]) != i + 1) throw DomainError("diagram is not a meander closure");
    s[i] = axis[i] > 0 ? 1 : -1;
  }
  return s;
}

Diagram meander_sum(const Diagram& a, const Diagram& b) {
  auto sa = axis_signs_of(a), sb = axis_signs_of(b);
  const auto& pa = a.layout()->permutation;
  const auto& pb = b.layout()->permutation;
  const int na = static_cast<int>(pa.size());
  std::vector<int> perm = pa, signs = sa;
  // a's curve leaves its last foot above the axis when na is odd
  bool turn = na % 2 == 1;
  for (int x : pb) perm.push_back(x + na);
  for (int s : sb) signs.push_back(turn ? -s : s);
  return close_meander(perm, signs);
}

bool is_half_ordered(const GaussCode& g) {
  if (g.components.size() != 1) return false;
  const auto& c = g.components[0];
  return visits_all_once(first_half(c), static_cast<int>(c.size()) / 2);
}

GaussCode reflect_code(const GaussCode& g) {
  if (!is_half_ordered(g)) throw DomainError("code is not ordered");
  const auto& c = g.components[0];
  auto a = first_half(c), q = second_half(c);
  std::reverse(a.begin(), a.end());
  std::reverse(q.begin(), q.end());
  a.insert(a.end(), q.begin(), q.end());
  GaussCode r;
  r.components.push_back(std::move(a));
  return r;
}

GaussCode ogc_product_code(const GaussCode& g1, const GaussCode& g2) {
  validate_gauss_code(g1);
  validate_gauss_code(g2);
  if (!is_half_ordered(g1) || !is_half_ordered(g2)) throw DomainError("product operands must be ordered knot codes");
  const int n1 = g1.crossing_count(), n2 = g2.crossing_count();
  if (n1 != n2) throw DomainError("product operands must have the same number of crossings");
  if (n1 % 2 == 0) throw DomainError("knot product needs an odd number of crossings; even codes are not realizable");
  auto p = second_half(g1.components[0]);
  for (int v : second_half(g2.components[0])) p.push_back(-v);
  GaussCode out;
  out.components.push_back(std::move(p));
  check_signs(out);
  return out;
}

Diagram ogc_product_knots(const GaussCode& g1, const GaussCode& g2) {
  return realize_gauss_code(ogc_product_code(g1, g2));
}

GaussCode ogc_link_product_code(const GaussCode& g1, const GaussCode& g2) {
  validate_gauss_code(g1);
  validate_gauss_code(g2);
  const int n1 = g1.crossing_count(), n2 = g2.crossing_count();
  if (n1 != n2) throw DomainError("product operands must have the same number of crossings");
  if (n1 % 2 == 1) throw DomainError("link product needs an even number of crossings");
  auto p = link_operand(g1), q = link_operand(g2);
  for (auto& v : q) v = -v;
  GaussCode out;
  out.components = {p, q};
  check_signs(out);
  return out;
}

GaussCode ordered_link_form(const GaussCode& g) {
  const int n = g.crossing_count();
  if (g.components.empty() || !visits_all_once(g.components[0], n))
    throw DomainError("first component must visit every crossing once");
  std::vector<int> map(n + 1);
  for (int i = 0; i < n; ++i) map[std::abs(g.components[0][i])] = i + 1;
  GaussCode out = g;
  for (auto& c : out.components)
    for (auto& v : c) v = v > 0 ? map[v] : -map[-v];
  return out;
}

Diagram ogc_product_links(const GaussCode& g1, const GaussCode& g2) {
  return realize_gauss_code(ogc_link_product_code(g1, g2));
}

GaussCode ordered_code_of(const Diagram& d) {
  auto o = find_ordered_form(d.gauss());
  if (!o) throw DomainError("diagram has no ordered gauss code");
  return *o;
}

bool ordered_shadow_is_meander(const GaussCode& g) {
  if (!is_ordered(g)) return false;
  std::vector<int> p;
  for (int v : second_half(g.components[0])) p.push_back(std::abs(v));
  std::vector<int> r(p.rbegin(), p.rend());
  return validate_meander_permutation(p) || validate_meander_permutation(r);
}

}  // namespace meander
