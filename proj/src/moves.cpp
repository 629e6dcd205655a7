#include "meander/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "meander/errors.hpp"

namespace meander {

namespace {

struct Flat {
  std::vector<int> comp, pos, label, next;
};

Flat flatten(const GaussCode& g) {
  Flat f;
  int v = 0;
  for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
    const auto& c = g.components[k];
    int first = v, len = static_cast<int>(c.size());
    for (int i = 0; i < len; ++i, ++v) {
      f.comp.push_back(k);
      f.pos.push_back(i);
      f.label.push_back(c[i]);
      f.next.push_back(i + 1 < len ? v + 1 : first);
    }
  }
  return f;
}

std::optional<Diagram> build(GaussCode g, std::vector<int> signs) {
  try {
    return Diagram(std::move(g), std::move(signs));
  } catch (const RealizabilityError&) {
    return std::nullopt;
  }
}

// Code with the labels in `drop` removed and the rest renumbered in order.
std::optional<Diagram> without(const Diagram& d, std::vector<int> drop) {
  const int n = d.crossing_count();
  std::vector<int> map(n + 1, 0), signs;
  int next = 0;
  for (int l = 1; l <= n; ++l) {
    if (std::find(drop.begin(), drop.end(), l) != drop.end()) continue;
    map[l] = ++next;
    signs.push_back(d.sign(l));
  }
  GaussCode g;
  for (const auto& c : d.gauss().components) {
    std::vector<int> out;
    for (int x : c)
      if (map[std::abs(x)]) out.push_back(x > 0 ? map[x] : -map[-x]);
    g.components.push_back(std::move(out));
  }
  return build(std::move(g), std::move(signs));
}

GaussCode with_inserts(const GaussCode& g, const std::map<std::pair<int, int>, std::vector<int>>& after) {
  GaussCode out;
  for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
    std::vector<int> c;
    for (int i = 0; i < static_cast<int>(g.components[k].size()); ++i) {
      c.push_back(g.components[k][i]);
      if (auto it = after.find({k, i}); it != after.end()) c.insert(c.end(), it->second.begin(), it->second.end());
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

// Face of `size` darts whose edges all join crossings in `labels`.
bool has_face(const Diagram& d, int size, std::vector<int> labels) {
  for (const auto& f : checkerboard_faces(d)) {
    if (static_cast<int>(f.darts.size()) != size) continue;
    bool ok = true;
    for (int dart : f.darts) {
      int e = std::abs(dart) - 1;
      for (int c : {d.tail(e).crossing, d.head(e).crossing})
        if (std::find(labels.begin(), labels.end(), c + 1) == labels.end()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<Diagram> r1_add(const Diagram& d, int edge, bool over_first, int sign) {
  if (edge < 0 || edge >= d.edge_count()) return std::nullopt;
  Flat f = flatten(d.gauss());
  const int m = d.crossing_count() + 1;
  std::map<std::pair<int, int>, std::vector<int>> ins;
  ins[{f.comp[edge], f.pos[edge]}] = over_first ? std::vector<int>{m, -m} : std::vector<int>{-m, m};
  auto signs = d.signs();
  signs.push_back(sign);
  auto r = build(with_inserts(d.gauss(), ins), signs);
  if (r && !has_face(*r, 1, {m})) return std::nullopt;
  return r;
}

std::vector<Diagram> r1_removals(const Diagram& d) {
  std::vector<Diagram> out;
  Flat f = flatten(d.gauss());
  for (int v = 0; v < static_cast<int>(f.label.size()); ++v) {
    int w = f.next[v];
    if (w == v || f.label[v] != -f.label[w]) continue;
    if (!has_face(d, 1, {std::abs(f.label[v])})) continue;
    if (auto r = without(d, {std::abs(f.label[v])})) out.push_back(std::move(*r));
  }
  return out;
}

std::optional<Diagram> r2_add(const Diagram& d, int e1, int e2, bool e1_over, bool same_order, int sign) {
  const int E = d.edge_count();
  if (e1 < 0 || e2 < 0 || e1 >= E || e2 >= E || e1 == e2) return std::nullopt;
  Flat f = flatten(d.gauss());
  const int a = d.crossing_count() + 1, b = a + 1;
  int s1 = e1_over ? 1 : -1;
  std::map<std::pair<int, int>, std::vector<int>> ins;
  ins[{f.comp[e1], f.pos[e1]}] = {s1 * a, s1 * b};
  ins[{f.comp[e2], f.pos[e2]}] = same_order ? std::vector<int>{-s1 * a, -s1 * b} : std::vector<int>{-s1 * b, -s1 * a};
  auto signs = d.signs();
  signs.push_back(sign);
  signs.push_back(-sign);
  auto r = build(with_inserts(d.gauss(), ins), signs);
  if (r && !has_face(*r, 2, {a, b})) return std::nullopt;
  return r;
}

std::vector<Diagram> r2_removals(const Diagram& d) {
  std::vector<Diagram> out;
  Flat f = flatten(d.gauss());
  const int V = static_cast<int>(f.label.size());
  for (int v = 0; v < V; ++v) {
    int w = f.next[v];
    int a = f.label[v], b = f.label[w];
    if (w == v || std::abs(a) == std::abs(b) || (a > 0) != (b > 0) || !(a > 0)) continue;
    if (d.sign(a) == d.sign(b)) continue;
    // the other visits of a and b must be adjacent as well
    bool adjacent = false;
    for (int x = 0; x < V; ++x) {
      int y = f.next[x];
      if ((f.label[x] == -a && f.label[y] == -b) || (f.label[x] == -b && f.label[y] == -a)) adjacent = true;
    }
    if (!adjacent || !has_face(d, 2, {a, b})) continue;
    if (auto r = without(d, {a, b})) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<Diagram> r3_moves(const Diagram& d) {
  std::vector<Diagram> out;
  Flat f = flatten(d.gauss());
  for (const auto& face : checkerboard_faces(d)) {
    if (face.darts.size() != 3) continue;
    std::vector<int> edges, crossings;
    bool one_sided = false, loop = false;
    for (int dart : face.darts) {
      int e = std::abs(dart) - 1;
      edges.push_back(e);
      int x = f.label[e], y = f.label[f.next[e]];
      crossings.push_back(std::abs(x));
      crossings.push_back(std::abs(y));
      if (std::abs(x) == std::abs(y)) loop = true;
      if ((x > 0) == (y > 0)) one_sided = true;
    }
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
    if (loop || crossings.size() != 3 || !one_sided) continue;
    GaussCode g = d.gauss();
    for (int e : edges) {
      int w = f.next[e];
      std::swap(g.components[f.comp[e]][f.pos[e]], g.components[f.comp[w]][f.pos[w]]);
    }
    if (auto r = build(std::move(g), d.signs())) out.push_back(std::move(*r));
  }
  return out;
}

std::optional<Move> random_move(const Diagram& d, std::mt19937_64& rng) {
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  const int E = d.edge_count();
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto kind = static_cast<MoveKind>(pick(5));
    std::optional<Diagram> r;
    switch (kind) {
      case MoveKind::r1_add:
        if (E) r = r1_add(d, pick(E), pick(2), pick(2) ? 1 : -1);
        break;
      case MoveKind::r2_add:
        if (E > 1) r = r2_add(d, pick(E), pick(E), pick(2), pick(2), pick(2) ? 1 : -1);
        break;
      case MoveKind::r1_remove:
      case MoveKind::r2_remove:
      case MoveKind::r3: {
        auto all = kind == MoveKind::r3 ? r3_moves(d) : kind == MoveKind::r1_remove ? r1_removals(d) : r2_removals(d);
        if (!all.empty()) r = std::move(all[pick(static_cast<int>(all.size()))]);
        break;
      }
    }
    if (r) return Move{kind, std::move(*r)};
  }
  return std::nullopt;
}

}  // namespace meander
