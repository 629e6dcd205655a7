#include "meander/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "meander/errors.hpp"

namespace meander {

BracketInput bracket_input(const Diagram& d) {
  BracketInput in;
  in.network.edge_count = d.edge_count();
  in.network.free_loops = d.free_loops();
  for (const auto& x : d.pd()) in.network.crossings.push_back(x.edges);
  // PD slots 0 and 2 carry the under strand; rotating the over strand
  // counterclockwise sweeps the corners joined by pairing 0
  in.a_pairing.assign(d.crossing_count(), 0);
  if (d.layout() && !d.layout()->permutation.empty()) {
    in.order.resize(d.crossing_count());
    std::iota(in.order.begin(), in.order.end(), 0);
  } else {
    in.order = greedy_order(in.network);
  }
  return in;
}

LaurentPolynomial kauffman_bracket(const Diagram& d) {
  BracketInput in = bracket_input(d);
  TransferPlan plan(in.network, in.order);
  auto a = LaurentPolynomial::monomial(1), ai = LaurentPolynomial::monomial(-1);
  auto loop = -(LaurentPolynomial::monomial(2) + LaurentPolynomial::monomial(-2));
  return plan.evaluate(in.a_pairing, a, ai, loop);
}

LaurentPolynomial kauffman_bracket_state_sum(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > 20) throw DomainError("state sum limited to 20 crossings");
  const auto& comps = d.gauss().components;
  // visit v leaves along edge v and arrives along edge prev[v]
  std::vector<int> prev, over(n), under(n);
  int v = 0;
  for (const auto& c : comps) {
    int first = v, len = static_cast<int>(c.size());
    for (int i = 0; i < len; ++i, ++v) {
      prev.push_back(i ? v - 1 : first + len - 1);
      (c[i] > 0 ? over : under)[std::abs(c[i]) - 1] = v;
    }
  }
  const int E = v, free = d.free_loops();
  std::vector<int> par(E);
  auto find = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  LaurentPolynomial total;
  const auto loop = -(LaurentPolynomial::monomial(2) + LaurentPolynomial::monomial(-2));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::iota(par.begin(), par.end(), 0);
    int b = 0;
    for (int c = 0; c < n; ++c) {
      int ui = prev[under[c]], uo = under[c], oi = prev[over[c]], oo = over[c];
      bool smooth_b = (s >> c) & 1;
      b += smooth_b;
      // A joins in-under to out-over at a positive crossing (the oriented smoothing)
      bool oriented = smooth_b == (d.sign(c + 1) < 0);
      if (oriented) {
        par[find(ui)] = find(oo);
        par[find(oi)] = find(uo);
      } else {
        par[find(ui)] = find(oi);
        par[find(uo)] = find(oo);
      }
    }
    int loops = free;
    for (int e = 0; e < E; ++e) loops += find(e) == e;
    LaurentPolynomial term = LaurentPolynomial::monomial(n - 2 * b);
    for (int k = 1; k < loops; ++k) term *= loop;
    total += term;
  }
  return total;
}

ModP kauffman_bracket_mod(const Diagram& d, ModP a) {
  BracketInput in = bracket_input(d);
  TransferPlan plan(in.network, in.order);
  ModP ai = a.inverse();
  ModP loop = -(a * a + ai * ai);
  return plan.evaluate(in.a_pairing, a, ai, loop);
}

LaurentPolynomial normalized_bracket(const Diagram& d) {
  int w = d.writhe();
  return kauffman_bracket(d) * LaurentPolynomial::monomial(-3 * w, w % 2 ? -1 : 1);
}

LaurentPolynomial jones_polynomial(const Diagram& d) { return normalized_bracket(d).divided_exponents(-2); }

LaurentPolynomial unit_normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial q = p.shifted(-p.min_exponent());
  if (q.coefficient(0) < 0) q = -q;
  return q;
}

LaurentPolynomial chirality_class(const LaurentPolynomial& p) {
  LaurentPolynomial a = unit_normalize(p), b = unit_normalize(p.inverted());
  return b < a ? b : a;
}

std::string Fingerprint::key() const { return std::to_string(n_components) + "|" + chirality_class.serialize(); }

Fingerprint fingerprint_from_bracket(int components, const LaurentPolynomial& normalized, int crossings) {
  Fingerprint f;
  f.n_components = components;
  f.reduced_crossings = crossings;
  f.normalized_bracket = normalized;
  f.chirality_class = chirality_class(normalized);
  return f;
}

Fingerprint fingerprint(const Diagram& d) {
  Diagram r = remove_nugatory(d);
  return fingerprint_from_bracket(d.component_count(), normalized_bracket(r), r.crossing_count());
}

std::int64_t determinant_from_bracket(const LaurentPolynomial& f) {
  if (f.is_zero()) return 0;
  const int r = f.min_exponent();
  std::int64_t s = 0;
  for (auto [e, c] : f.terms()) {
    if ((e - r) % 4 != 0) throw DomainError("bracket exponents are not congruent mod 4");
    s += ((e - r) / 4) % 2 ? -c : c;
  }
  return s < 0 ? -s : s;
}

std::int64_t determinant(const Diagram& d) { return determinant_from_bracket(normalized_bracket(d)); }

std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
  const int c = d.component_count();
  if (c < 2) throw DomainError("linking numbers need at least two components");
  std::vector<int> comp_of_over(d.crossing_count() + 1), comp_of_under(d.crossing_count() + 1);
  for (int k = 0; k < c; ++k)
    for (int v : d.gauss().components[k]) (v > 0 ? comp_of_over : comp_of_under)[std::abs(v)] = k;
  std::vector<std::vector<int>> twice(c, std::vector<int>(c, 0));
  for (int a = 1; a <= d.crossing_count(); ++a) {
    int i = comp_of_over[a], j = comp_of_under[a];
    if (i == j) continue;
    twice[i][j] += d.sign(a);
    twice[j][i] += d.sign(a);
  }
  for (auto& row : twice)
    for (auto& x : row) x /= 2;
  return twice;
}

std::vector<std::vector<std::int64_t>> coloring_matrix(const Diagram& d) {
  const auto& comps = d.gauss().components;
  // arc id of the edge leaving each visit
  std::vector<int> arc_of_edge(d.edge_count(), -1);
  int arcs = 0, base = 0;
  for (const auto& comp : comps) {
    const int L = static_cast<int>(comp.size());
    int first_under = -1;
    for (int i = 0; i < L; ++i)
      if (comp[i] < 0) {
        first_under = i;
        break;
      }
    if (L == 0) {
      ++arcs;
      continue;
    }
    if (first_under < 0) {
      for (int i = 0; i < L; ++i) arc_of_edge[base + i] = arcs;
      ++arcs;
    } else {
      for (int k = 0; k < L; ++k) {
        int i = (first_under + k) % L;
        if (comp[i] < 0) ++arcs;
        arc_of_edge[base + i] = arcs - 1;
      }
    }
    base += L;
  }
  const int n = d.crossing_count();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(arcs, 0));
  for (int c = 0; c < n; ++c) {
    const auto& e = d.pd()[c].edges;
    // slots 0,2 under; the over strand's two edges share an arc
    m[c][arc_of_edge[e[1]]] += 2;
    m[c][arc_of_edge[e[0]]] -= 1;
    m[c][arc_of_edge[e[2]]] -= 1;
  }
  if (n == 0) m.assign(1, std::vector<std::int64_t>(arcs, 0));
  return m;
}

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::int64_t> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero pivot in the remaining block
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr < 0 || std::llabs(m[i][j]) < best)) pr = i, pc = j, best = std::llabs(m[i][j]);
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      std::int64_t q = m[i][t] / m[t][t];
      if (q)
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t]) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      std::int64_t q = m[t][j] / m[t][t];
      if (q)
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j]) clean = false;
    }
    if (!clean) continue;
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  // canonical divisibility chain
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      std::int64_t g = std::gcd(diag[i], diag[j]);
      std::int64_t l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  const int zeros = std::min(rows, cols) - static_cast<int>(diag.size());
  for (int k = 0; k < zeros; ++k) diag.push_back(0);
  if (cols > rows)
    for (int k = 0; k < cols - rows; ++k) diag.push_back(0);
  return diag;
}

ColoringModule coloring_module(const Diagram& d) {
  auto inv = smith_invariants(coloring_matrix(d));
  ColoringModule cm;
  int zeros = 0;
  for (auto x : inv) {
    if (x == 0) ++zeros;
    else if (x > 1) cm.torsion.push_back(x);
  }
  cm.free_rank = std::max(0, zeros - 1);
  return cm;
}

namespace {

ModP det_mod(std::vector<std::vector<ModP>> m) {
  const size_t n = m.size();
  ModP det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].v == 0) ++p;
    if (p == n) return ModP();
    if (p != c) std::swap(m[p], m[c]), det = -det;
    det *= m[c][c];
    ModP inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].v == 0) continue;
      ModP f = m[r][c] * inv;
      for (size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

}  // namespace

LaurentPolynomial alexander_polynomial(const Diagram& d) {
  if (d.component_count() != 1) throw DomainError("alexander polynomial is computed for knots only");
  const int n = d.crossing_count();
  if (n == 0) return LaurentPolynomial::monomial(0);
  // arc of each edge: a new arc starts after every under pass
  std::vector<int> arc(d.edge_count(), -1);
  const auto& comp = d.gauss().components[0];
  const int L = static_cast<int>(comp.size());
  int first_under = 0;
  while (comp[first_under] > 0) ++first_under;
  int arcs = 0;
  for (int k = 0; k < L; ++k) {
    int i = (first_under + k) % L;
    if (comp[i] < 0) ++arcs;
    arc[i] = arcs - 1;
  }
  // rows of the Fox matrix as (over, in, out) coefficients in t; drop the last row and arc
  auto eval = [&](ModP t) {
    std::vector<std::vector<ModP>> m(n - 1, std::vector<ModP>(n - 1));
    auto add = [&](int r, int a, ModP v) {
      if (a < n - 1) m[r][a] += v;
    };
    for (int c = 0; c + 1 < n; ++c) {
      const auto& e = d.pd()[c].edges;
      int in = arc[e[0]], out = arc[e[2]], over = arc[e[1]];
      add(c, over, ModP(1) - t);
      if (d.sign(c + 1) > 0) {
        add(c, in, t);
        add(c, out, -ModP(1));
      } else {
        add(c, in, -ModP(1));
        add(c, out, t);
      }
    }
    return det_mod(std::move(m));
  };
  // degree below n: interpolate through t = 1..n
  std::vector<ModP> xs(n), ys(n);
  for (int i = 0; i < n; ++i) xs[i] = ModP(i + 1), ys[i] = eval(xs[i]);
  std::vector<ModP> coef(n);
  for (int i = 0; i < n; ++i) {
    std::vector<ModP> basis{ModP(1)};
    ModP denom(1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<ModP> nb(basis.size() + 1);
      for (size_t k = 0; k < basis.size(); ++k) {
        nb[k + 1] += basis[k];
        nb[k] = nb[k] - basis[k] * xs[j];
      }
      basis = std::move(nb);
      denom *= xs[i] - xs[j];
    }
    ModP w = ys[i] * denom.inverse();
    for (size_t k = 0; k < basis.size(); ++k) coef[k] += basis[k] * w;
  }
  std::vector<std::pair<int, std::int64_t>> terms;
  std::int64_t at_one = 0;
  for (int k = 0; k < n; ++k) {
    std::int64_t v = coef[k].v > ModP::kP / 2 ? -static_cast<std::int64_t>(ModP::kP - coef[k].v)
                                              : static_cast<std::int64_t>(coef[k].v);
    if (v) terms.emplace_back(k, v), at_one += v;
  }
  LaurentPolynomial p = LaurentPolynomial::from_terms(terms);
  if (p.is_zero()) return p;
  p = p.shifted(-p.min_exponent());
  return at_one < 0 ? -p : p;
}

std::string ColoringModule::str() const {
  std::string s;
  for (auto t : torsion) s += (s.empty() ? "Z/" : " + Z/") + std::to_string(t);
  for (int k = 0; k < free_rank; ++k) s += s.empty() ? "Z" : " + Z";
  return s.empty() ? "0" : s;
}

}  // namespace meander
