#include "meander/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "meander/errors.hpp"

namespace meander {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

struct Embedding {
  std::vector<PdCrossing> pd;
  std::vector<EdgeEnd> head, tail;
  std::vector<int> edge_comp;
  int cycles = 0, pieces = 0;
  bool planar = false;
};

// Visit bookkeeping shared by the constructor and the realization search.
struct Visits {
  int n = 0;
  std::vector<int> label, comp, next, prev;
  std::vector<int> over_visit, under_visit;  // per crossing

  explicit Visits(const GaussCode& g) {
    n = g.crossing_count();
    over_visit.assign(n, -1);
    under_visit.assign(n, -1);
    int v = 0;
    for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
      const auto& c = g.components[k];
      int first = v, len = static_cast<int>(c.size());
      for (int i = 0; i < len; ++i, ++v) {
        label.push_back(c[i]);
        comp.push_back(k);
        next.push_back(i + 1 < len ? v + 1 : first);
        prev.push_back(i > 0 ? v - 1 : first + len - 1);
        (c[i] > 0 ? over_visit : under_visit)[std::abs(c[i]) - 1] = v;
      }
    }
  }
};

Embedding embed(const Visits& vs, const std::vector<int>& signs, bool want_full) {
  Embedding em;
  const int n = vs.n, E = static_cast<int>(vs.label.size());
  em.pd.resize(n);
  em.head.resize(E);
  em.tail.resize(E);
  for (int c = 0; c < n; ++c) {
    int u = vs.under_visit[c], o = vs.over_visit[c];
    int ui = vs.prev[u], uo = u, oi = vs.prev[o], oo = o;
    if (signs[c] > 0) em.pd[c].edges = {ui, oo, uo, oi};
    else em.pd[c].edges = {ui, oi, uo, oo};
    em.tail[uo] = {c, 2};
    em.head[ui] = {c, 0};
    em.tail[oo] = {c, signs[c] > 0 ? 1 : 3};
    em.head[oi] = {c, signs[c] > 0 ? 3 : 1};
  }
  UnionFind uf(std::max(n, 1));
  for (int e = 0; e < E; ++e) uf.unite(em.tail[e].crossing, em.head[e].crossing);
  for (int c = 0; c < n; ++c)
    if (uf.find(c) == c) ++em.pieces;
  std::vector<char> seen(2 * E, 0);
  for (int d0 = 0; d0 < 2 * E; ++d0) {
    if (seen[d0]) continue;
    ++em.cycles;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      int e = d >> 1;
      bool fwd = (d & 1) == 0;
      EdgeEnd at = fwd ? em.head[e] : em.tail[e];
      int s2 = (at.slot + 1) & 3;
      int f = em.pd[at.crossing].edges[s2];
      bool out = em.tail[f].crossing == at.crossing && em.tail[f].slot == s2;
      d = 2 * f + (out ? 0 : 1);
    }
  }
  em.planar = n == 0 || em.cycles == n + 2 * em.pieces;
  if (want_full) {
    em.edge_comp.resize(E);
    for (int e = 0; e < E; ++e) em.edge_comp[e] = vs.comp[e];
  }
  return em;
}

}  // namespace

Diagram::Diagram(GaussCode g, std::vector<int> signs) : gauss_(std::move(g)), signs_(std::move(signs)) {
  validate_gauss_code(gauss_);
  if (static_cast<int>(signs_.size()) != gauss_.crossing_count())
    throw MalformedInput("one crossing sign per label required");
  for (int s : signs_)
    if (s != 1 && s != -1) throw MalformedInput("crossing signs must be +1 or -1");
  Visits vs(gauss_);
  Embedding em = embed(vs, signs_, true);
  if (!em.planar) throw RealizabilityError("gauss code with these crossing signs is not planar");
  pd_ = std::move(em.pd);
  head_ = std::move(em.head);
  tail_ = std::move(em.tail);
  edge_comp_ = std::move(em.edge_comp);
  face_cycles_ = em.cycles;
  pieces_ = em.pieces;
}

int Diagram::free_loops() const {
  int k = 0;
  for (const auto& c : gauss_.components)
    if (c.empty()) ++k;
  return k;
}

int Diagram::writhe() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

std::vector<int> alternating_axis_signs(int n) {
  std::vector<int> s(n);
  for (int i = 1; i <= n; ++i) s[i - 1] = i % 2 ? -1 : 1;
  return s;
}

Diagram close_meander(std::span<const int> perm, std::span<const int> axis_signs) {
  if (!validate_meander_permutation(perm))
    throw NotAMeander("not a meander permutation: " + format_permutation(perm));
  const int n = static_cast<int>(perm.size());
  if (static_cast<int>(axis_signs.size()) != n) throw MalformedInput("one axis sign per crossing required");
  std::vector<int> axis(n), signs(n);
  for (int i = 1; i <= n; ++i) axis[i - 1] = axis_signs[i - 1] > 0 ? i : -i;
  auto curve_entry = [&](int x) { return axis_signs[x - 1] > 0 ? -x : x; };
  MeanderLayout lay;
  lay.permutation.assign(perm.begin(), perm.end());
  GaussCode g;
  if (n % 2 == 1) {
    bool curl_a = perm[0] == n || perm[n - 1] == 1;
    bool reversed = curl_a && n > 1;
    std::vector<int> code = axis;
    for (int j = 1; j <= n; ++j) {
      int jj = reversed ? n + 1 - j : j;
      int x = perm[jj - 1];
      code.push_back(curve_entry(x));
      bool up = (jj % 2 == 1) != reversed;
      signs[x - 1] = axis_crossing_sign(axis_signs[x - 1] > 0, up);
    }
    g.components.push_back(std::move(code));
    lay.reversed = reversed;
  } else {
    std::vector<int> curve;
    for (int j = 1; j <= n; ++j) {
      int x = perm[j - 1];
      curve.push_back(curve_entry(x));
      signs[x - 1] = axis_crossing_sign(axis_signs[x - 1] > 0, j % 2 == 1);
    }
    g.components = {axis, curve};
  }
  Diagram d(std::move(g), std::move(signs));
  d.set_layout(std::move(lay));
  return d;
}

Diagram close_open_meander(const OpenMeander& m) {
  auto s = alternating_axis_signs(m.order);
  return close_meander(m.permutation, s);
}

Diagram close_meandric_system(const MeandricSystem& s) {
  const int n = s.order;
  auto axis_signs = alternating_axis_signs(n);
  std::vector<int> axis(n), signs(n);
  for (int i = 1; i <= n; ++i) axis[i - 1] = axis_signs[i - 1] > 0 ? i : -i;
  GaussCode g;
  g.components.push_back(axis);
  for (const auto& loop : s.loops) {
    std::vector<int> comp;
    for (size_t j = 0; j < loop.size(); ++j) {
      int x = loop[j];
      comp.push_back(axis_signs[x - 1] > 0 ? -x : x);
      signs[x - 1] = axis_crossing_sign(axis_signs[x - 1] > 0, j % 2 == 0);
    }
    g.components.push_back(std::move(comp));
  }
  Diagram d(std::move(g), std::move(signs));
  MeanderLayout lay;
  lay.loops = s.loops;
  d.set_layout(std::move(lay));
  return d;
}

Diagram realize_gauss_code(const GaussCode& g) {
  validate_gauss_code(g);
  const int n = g.crossing_count();
  if (n > 26) throw DomainError("realization search limited to 26 crossings");
  if (n == 0) return Diagram(g, {});
  Visits vs(g);
  std::vector<int> signs(n, 1);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int c = 1; c < n; ++c) signs[c] = (mask >> (c - 1)) & 1 ? -1 : 1;
    if (embed(vs, signs, false).planar) return Diagram(g, signs);
  }
  throw RealizabilityError("gauss code has no planar realization: " + format_gauss_code(g));
}

Diagram mirror(const Diagram& d) {
  GaussCode g = d.gauss();
  for (auto& c : g.components)
    for (auto& x : c) x = -x;
  std::vector<int> s = d.signs();
  for (auto& x : s) x = -x;
  Diagram m(std::move(g), std::move(s));
  if (d.layout()) m.set_layout(*d.layout());
  return m;
}

std::vector<Face> checkerboard_faces(const Diagram& d) {
  const int E = d.edge_count();
  std::vector<int> face_of(2 * E, -1);
  std::vector<Face> faces;
  for (int d0 = 0; d0 < 2 * E; ++d0) {
    if (face_of[d0] != -1) continue;
    Face f;
    int id = static_cast<int>(faces.size());
    int x = d0;
    while (face_of[x] == -1) {
      face_of[x] = id;
      int e = x >> 1;
      bool fwd = (x & 1) == 0;
      f.darts.push_back(fwd ? e + 1 : -(e + 1));
      EdgeEnd at = fwd ? d.head(e) : d.tail(e);
      f.corners.push_back(at);
      int s2 = (at.slot + 1) & 3;
      int g = d.pd()[at.crossing].edges[s2];
      bool out = d.tail(g).crossing == at.crossing && d.tail(g).slot == s2;
      x = 2 * g + (out ? 0 : 1);
    }
    faces.push_back(std::move(f));
  }
  // faces on the two sides of an edge get different colors
  std::vector<int> color(faces.size(), -1);
  for (size_t s = 0; s < faces.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int dart : faces[a].darts) {
        int e = std::abs(dart) - 1;
        int other = face_of[2 * e + (dart > 0 ? 1 : 0)];
        if (color[other] == -1) {
          color[other] = color[a] ^ 1;
          q.push(other);
        }
      }
    }
  }
  for (size_t s = 0; s < faces.size(); ++s) faces[s].color = color[s];
  return faces;
}

namespace {

// face id of every corner, indexed crossing*4 + slot
std::vector<int> corner_faces(const Diagram& d, const std::vector<Face>& faces) {
  std::vector<int> cf(4 * d.crossing_count(), -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (auto c : faces[f].corners) cf[4 * c.crossing + c.slot] = static_cast<int>(f);
  return cf;
}

}  // namespace

std::vector<int> nugatory_crossings(const Diagram& d) {
  auto faces = checkerboard_faces(d);
  auto cf = corner_faces(d, faces);
  std::vector<int> out;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (cf[4 * c] == cf[4 * c + 2] || cf[4 * c + 1] == cf[4 * c + 3]) out.push_back(c);
  return out;
}

Diagram remove_nugatory(const Diagram& start) {
  Diagram d = start;
  while (true) {
    auto faces = checkerboard_faces(d);
    auto cf = corner_faces(d, faces);
    int c = -1, k = 0;
    for (int x = 0; x < d.crossing_count() && c < 0; ++x) {
      if (cf[4 * x] == cf[4 * x + 2]) c = x, k = 0;
      else if (cf[4 * x + 1] == cf[4 * x + 3]) c = x, k = 1;
    }
    if (c < 0) return d;
    // one side of the separating circle: everything reachable from slots k+1, k+2
    const int n = d.crossing_count();
    std::vector<char> side(n, 0);
    std::queue<int> q;
    auto visit_edge = [&](int e) {
      for (EdgeEnd end : {d.head(e), d.tail(e)}) {
        if (end.crossing != c && !side[end.crossing]) {
          side[end.crossing] = 1;
          q.push(end.crossing);
        }
      }
    };
    visit_edge(d.pd()[c].edges[(k + 1) & 3]);
    visit_edge(d.pd()[c].edges[(k + 2) & 3]);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e : d.pd()[x].edges) visit_edge(e);
    }
    // rotating that side about the circle swaps its over/unders and keeps signs
    const int label = c + 1;
    GaussCode g;
    std::vector<int> signs;
    for (int x = 0; x < n; ++x)
      if (x != c) signs.push_back(d.signs()[x]);
    for (const auto& comp : d.gauss().components) {
      std::vector<int> out;
      for (int v : comp) {
        int a = std::abs(v);
        if (a == label) continue;
        int w = side[a - 1] ? -v : v;
        int na = a > label ? a - 1 : a;
        out.push_back(w > 0 ? na : -na);
      }
      g.components.push_back(std::move(out));
    }
    d = Diagram(std::move(g), std::move(signs));
  }
}

DiagramFlags analyze(const Diagram& d) {
  DiagramFlags fl;
  const int n = d.crossing_count();
  const auto& comps = d.gauss().components;
  const int c = d.component_count();
  fl.reduced = nugatory_crossings(d).empty();
  // split: components not connected through shared crossings
  {
    UnionFind uf(c);
    std::vector<int> first_comp(n + 1, -1);
    for (int k = 0; k < c; ++k)
      for (int v : comps[k]) {
        int a = std::abs(v);
        if (first_comp[a] == -1) first_comp[a] = k;
        else uf.unite(first_comp[a], k);
      }
    int roots = 0;
    for (int k = 0; k < c; ++k)
      if (uf.find(k) == k) ++roots;
    fl.split = roots > 1;
  }
  fl.positive = std::all_of(d.signs().begin(), d.signs().end(), [&](int s) { return s == d.signs()[0]; });
  fl.alternating = true;
  fl.components_simple = true;
  for (const auto& comp : comps) {
    const size_t L = comp.size();
    for (size_t i = 0; i < L; ++i)
      if ((comp[i] > 0) == (comp[(i + 1) % L] > 0) && L > 1) fl.alternating = false;
    std::vector<int> labels;
    for (int v : comp) labels.push_back(std::abs(v));
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) fl.components_simple = false;
  }
  fl.prime = fl.reduced && !fl.split && d.pieces() <= 1;
  if (fl.prime && n > 0) {
    auto faces = checkerboard_faces(d);
    std::vector<int> face_of(2 * d.edge_count());
    for (size_t f = 0; f < faces.size(); ++f)
      for (int dart : faces[f].darts) face_of[2 * (std::abs(dart) - 1) + (dart > 0 ? 0 : 1)] = static_cast<int>(f);
    std::vector<std::pair<int, int>> sides;
    for (int e = 0; e < d.edge_count(); ++e) {
      int a = face_of[2 * e], b = face_of[2 * e + 1];
      sides.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(sides.begin(), sides.end());
    if (std::adjacent_find(sides.begin(), sides.end()) != sides.end()) fl.prime = false;
  }
  return fl;
}

Diagram sublink(const Diagram& d, std::span<const int> components) {
  const auto& comps = d.gauss().components;
  std::vector<int> count(d.crossing_count() + 1, 0);
  for (int k : components) {
    if (k < 0 || k >= d.component_count()) throw MalformedInput("component index out of range");
    for (int v : comps[k]) count[std::abs(v)]++;
  }
  std::vector<int> relabel(d.crossing_count() + 1, 0), signs;
  int next = 0;
  for (int a = 1; a <= d.crossing_count(); ++a)
    if (count[a] == 2) {
      relabel[a] = ++next;
      signs.push_back(d.sign(a));
    }
  GaussCode g;
  for (int k : components) {
    std::vector<int> out;
    for (int v : comps[k])
      if (count[std::abs(v)] == 2) out.push_back(v > 0 ? relabel[v] : -relabel[-v]);
    g.components.push_back(std::move(out));
  }
  return Diagram(std::move(g), std::move(signs));
}

namespace {

struct DtKey {
  std::vector<int> sizes, abs_evens, evens;
  bool operator<(const DtKey& o) const {
    if (sizes != o.sizes) return sizes < o.sizes;
    if (abs_evens != o.abs_evens) return abs_evens < o.abs_evens;
    return evens < o.evens;
  }
};

// DT pairing of a visit sequence laid out component by component.
std::optional<DtKey> dt_of(const std::vector<const std::vector<int>*>& layout, int n) {
  std::vector<int> first(n + 1, 0), second(n + 1, 0);
  std::vector<int> state;  // over flag per visit position (1-based)
  state.push_back(0);
  int pos = 0;
  DtKey key;
  for (auto* r : layout) {
    key.sizes.push_back(static_cast<int>(r->size()) / 2);
    for (int v : *r) {
      ++pos;
      int a = std::abs(v);
      (first[a] ? second[a] : first[a]) = pos;
      state.push_back(v > 0);
    }
  }
  std::vector<int> odd_partner(2 * n + 2, 0);
  for (int a = 1; a <= n; ++a) {
    int i = first[a], j = second[a];
    if ((i + j) % 2 == 0) return std::nullopt;
    if (i % 2 == 0) std::swap(i, j);
    odd_partner[i] = j;
  }
  for (int k = 0; k < n; ++k) {
    int o = 2 * k + 1, e = odd_partner[o];
    key.abs_evens.push_back(e);
    key.evens.push_back(state[o] == state[1] ? e : -e);
  }
  return key;
}

std::vector<std::vector<int>> rotations(const std::vector<int>& c) {
  std::vector<std::vector<int>> out;
  const size_t L = c.size();
  std::vector<int> rev(c.rbegin(), c.rend());
  for (const std::vector<int>* base : {&c, static_cast<const std::vector<int>*>(&rev)})
    for (size_t s = 0; s < std::max<size_t>(L, 1); ++s) {
      std::vector<int> r(L);
      for (size_t i = 0; i < L; ++i) r[i] = (*base)[(s + i) % L];
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace

DTCode to_dt_code(const Diagram& d) {
  const auto& comps = d.gauss().components;
  const int n = d.crossing_count();
  if (d.free_loops() > 0) throw DomainError("dt codes need every component to have a crossing");
  const int c = static_cast<int>(comps.size());
  std::vector<std::vector<std::vector<int>>> rots;
  for (const auto& comp : comps) rots.push_back(rotations(comp));
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::optional<DtKey> best;
  do {
    std::vector<size_t> idx(c, 0);
    while (true) {
      std::vector<const std::vector<int>*> layout;
      for (int k = 0; k < c; ++k) layout.push_back(&rots[order[k]][idx[k]]);
      auto key = dt_of(layout, n);
      if (key && (!best || *key < *best)) best = std::move(key);
      int k = c - 1;
      while (k >= 0 && ++idx[k] == rots[order[k]].size()) idx[k--] = 0;
      if (k < 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best) throw DomainError("no odd/even labelling exists for this diagram");
  return DTCode{best->sizes, best->evens};
}

Diagram from_dt_code(const DTCode& code) {
  validate_dt_code(code);
  const int n = static_cast<int>(code.evens.size());
  std::vector<int> label(2 * n + 1, 0), sign(2 * n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int o = 2 * i - 1, e = std::abs(code.evens[i - 1]);
    label[o] = label[e] = i;
    bool odd_under = code.evens[i - 1] > 0;
    sign[o] = odd_under ? -1 : 1;
    sign[e] = -sign[o];
  }
  GaussCode g;
  int pos = 0;
  for (int s : code.component_sizes) {
    std::vector<int> comp;
    for (int k = 0; k < 2 * s; ++k) {
      ++pos;
      comp.push_back(sign[pos] * label[pos]);
    }
    g.components.push_back(std::move(comp));
  }
  return realize_gauss_code(g);
}

bool is_ordered(const GaussCode& g) {
  if (g.components.size() != 1) return false;
  const auto& c = g.components[0];
  const int n = static_cast<int>(c.size()) / 2;
  for (int i = 0; i < n; ++i)
    if (std::abs(c[i]) != i + 1) return false;
  return true;
}

std::optional<GaussCode> find_ordered_form(const GaussCode& g) {
  if (g.components.size() != 1) throw DomainError("ordered forms are defined for knots only");
  const auto& c = g.components[0];
  const int n = static_cast<int>(c.size()) / 2;
  std::optional<std::vector<int>> best;
  for (const auto& r : rotations(c)) {
    std::vector<int> map(n + 1, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int a = std::abs(r[i]);
      if (map[a]) ok = false;
      else map[a] = i + 1;
    }
    if (!ok) continue;
    std::vector<int> out(2 * n);
    for (int i = 0; i < 2 * n; ++i) out[i] = r[i] > 0 ? map[r[i]] : -map[-r[i]];
    // prefer a positive first entry, then the smallest code
    auto rank = [](const std::vector<int>& v) { return v.empty() || v[0] > 0 ? 0 : 1; };
    if (!best || rank(out) < rank(*best) || (rank(out) == rank(*best) && out < *best)) best = std::move(out);
  }
  if (!best) return std::nullopt;
  GaussCode o;
  o.components.push_back(std::move(*best));
  return o;
}

}  // namespace meander
