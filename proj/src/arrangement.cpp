#include "meander/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "meander/errors.hpp"
#include "meander/meander.hpp"

namespace meander {

namespace {

int add_dart(PlanarMap& m, int v, int curve) {
  int d = m.darts();
  m.twin.push_back(-1);
  m.next.push_back(d);
  m.prev.push_back(d);
  m.vertex.push_back(v);
  m.curve.push_back(curve);
  return d;
}

void insert_before(PlanarMap& m, int n, int d) {
  int p = m.prev[d];
  m.next[p] = n;
  m.prev[n] = p;
  m.next[n] = d;
  m.prev[d] = n;
}

// Splits the edge of d with a new vertex; returns {a, b}: a continues d's
// direction, b points back to d's origin.
std::pair<int, int> split(PlanarMap& m, int d) {
  int v = m.vertices++;
  int t = m.twin[d];
  int a = add_dart(m, v, m.curve[d]), b = add_dart(m, v, m.curve[d]);
  m.next[a] = b, m.prev[a] = b, m.next[b] = a, m.prev[b] = a;
  m.twin[d] = b, m.twin[b] = d;
  m.twin[a] = t, m.twin[t] = a;
  return {a, b};
}

// New edge between the corners before c1 and before c2.
void connect(PlanarMap& m, int c1, int c2, int curve) {
  int p = add_dart(m, m.vertex[c1], curve), q = add_dart(m, m.vertex[c2], curve);
  m.twin[p] = q, m.twin[q] = p;
  insert_before(m, p, c1);
  insert_before(m, q, c2);
}

struct CurveWalk {
  const std::function<void(const PlanarMap&)>& f;
  int id;
  int start_close;
  std::vector<int> hits;

  void go(const PlanarMap& m, int corner, int left) {
    if (left == 0) {
      for (int d = corner;;) {
        if (d == start_close) {
          for (int h : hits)
            if (h < 2) return;
          PlanarMap done = m;
          connect(done, corner, start_close, id);
          done.curves = id + 1;
          f(done);
          return;
        }
        d = m.face_next(d);
        if (d == corner) return;
      }
    }
    std::vector<int> face;
    for (int d = corner;;) {
      face.push_back(d);
      d = m.face_next(d);
      if (d == corner) break;
    }
    for (int d : face) {
      if (m.curve[d] == id) continue;
      PlanarMap nm = m;
      auto [a, b] = split(nm, d);
      connect(nm, corner, a, id);
      ++hits[m.curve[d]];
      go(nm, b, left - 1);
      --hits[m.curve[d]];
    }
  }
};

}  // namespace

PlanarMap map_of(const Diagram& d) {
  PlanarMap m;
  const int n = d.crossing_count();
  m.vertices = n;
  m.curves = d.component_count();
  m.twin.assign(4 * n, -1);
  m.next.resize(4 * n);
  m.prev.resize(4 * n);
  m.vertex.resize(4 * n);
  m.curve.assign(4 * n, -1);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      m.next[4 * c + s] = 4 * c + (s + 1) % 4;
      m.prev[4 * c + s] = 4 * c + (s + 3) % 4;
      m.vertex[4 * c + s] = c;
    }
  for (int e = 0; e < d.edge_count(); ++e) {
    EdgeEnd t = d.tail(e), h = d.head(e);
    int a = 4 * t.crossing + t.slot, b = 4 * h.crossing + h.slot;
    m.twin[a] = b, m.twin[b] = a;
    m.curve[a] = m.curve[b] = d.edge_component(e);
  }
  return m;
}

std::vector<int> canonical_map_code(const PlanarMap& m) {
  const int D = m.darts();
  std::vector<int> best, label(D), order, code(D);
  for (int dir = 0; dir < 2; ++dir) {
    const auto& rot = dir ? m.prev : m.next;
    for (int root = 0; root < D; ++root) {
      std::fill(label.begin(), label.end(), -1);
      order.clear();
      int next_label = 0;
      auto visit = [&](int e) {
        for (int d = e;;) {
          label[d] = next_label++;
          order.push_back(d);
          d = rot[d];
          if (d == e) break;
        }
      };
      visit(root);
      bool worse = false, better = best.empty();
      for (size_t i = 0; i < order.size() && !worse; ++i) {
        int t = m.twin[order[i]];
        if (label[t] < 0) visit(t);
        code[i] = label[t];
        if (!better) {
          if (code[i] > best[i]) worse = true;
          else if (code[i] < best[i]) better = true;
        }
      }
      if (!worse && better) best = code;
    }
  }
  return best;
}

Diagram alternating_diagram(const PlanarMap& m) {
  const int D = m.darts();
  // faces and a checkerboard coloring
  std::vector<int> face(D, -1);
  int faces = 0;
  for (int d = 0; d < D; ++d) {
    if (face[d] >= 0) continue;
    for (int e = d; face[e] < 0; e = m.face_next(e)) face[e] = faces;
    ++faces;
  }
  std::vector<int> color(faces, -1);
  std::vector<int> stack{face[0]};
  color[face[0]] = 0;
  std::vector<std::vector<int>> adj(faces);
  for (int d = 0; d < D; ++d) adj[face[d]].push_back(face[m.twin[d]]);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] < 0) color[g] = color[f] ^ 1, stack.push_back(g);
      else if (color[g] == color[f]) throw DomainError("shadow faces are not two-colorable");
    }
  }
  // over strand at each vertex: the dart whose preceding corner is colored 0
  std::vector<char> over(D, 0);
  for (int d = 0; d < D; ++d) {
    bool c0 = color[face[d]] == 0;
    over[d] = c0;  // strand through d and next[next[d]]
  }
  // traverse components
  std::vector<int> label(m.vertices, 0);
  int next_label = 0;
  std::vector<char> used(D, 0);
  GaussCode g;
  std::vector<int> out_over(m.vertices, -1), out_under(m.vertices, -1);
  for (int k = 0; k < m.curves; ++k) {
    int start = -1;
    for (int d = 0; d < D && start < 0; ++d)
      if (m.curve[d] == k) start = d;
    std::vector<int> comp;
    // walk: leave along d, arrive at twin, continue opposite
    for (int d = start; !used[d];) {
      used[d] = 1;
      int in = m.twin[d];
      int out = m.next[m.next[in]];
      int v = m.vertex[out];
      if (!label[v]) label[v] = ++next_label;
      bool is_over = over[out] != 0;
      comp.push_back(is_over ? label[v] : -label[v]);
      (is_over ? out_over : out_under)[v] = out;
      d = out;
    }
    // rotate so the walk starts at the first crossing after the start dart
    g.components.push_back(std::move(comp));
  }
  std::vector<int> signs(next_label);
  for (int v = 0; v < m.vertices; ++v) signs[label[v] - 1] = m.next[out_over[v]] == out_under[v] ? 1 : -1;
  return Diagram(std::move(g), std::move(signs));
}

void for_each_added_curve(const PlanarMap& m, int k, const std::function<void(const PlanarMap&)>& f) {
  if (k < 2 || k % 2) return;
  const int id = m.curves;
  for (int d = 0; d < m.darts(); ++d) {
    // every added curve meets curve 0; start on it
    if (m.curve[d] != 0 || d > m.twin[d]) continue;
    PlanarMap nm = m;
    auto [a, b] = split(nm, d);
    CurveWalk w{f, id, b, std::vector<int>(id, 0)};
    ++w.hits[0];
    w.go(nm, a, k - 1);
  }
}

std::vector<PlanarMap> curve_arrangements(int n, int c) {
  if (c < 2 || n < 0) throw DomainError("arrangements need at least two curves");
  std::map<std::vector<int>, PlanarMap> out;
  if (c == 2) {
    if (n < 2 || n % 2) return {};
    for_each_meandric_system(n, 1, [&](const MeandricSystem& s) {
      PlanarMap m = map_of(close_meandric_system(s));
      out.emplace(canonical_map_code(m), std::move(m));
      return true;
    });
  } else {
    const int need = 2 * (c - 1);
    for (int base = (c - 1) * (c - 2); base + need <= n; base += 2)
      for (const PlanarMap& b : curve_arrangements(base, c - 1))
        for_each_added_curve(b, n - base, [&](const PlanarMap& m) {
          auto code = canonical_map_code(m);
          if (!out.count(code)) out.emplace(std::move(code), m);
        });
  }
  std::vector<PlanarMap> v;
  v.reserve(out.size());
  for (auto& [k, m] : out) v.push_back(std::move(m));
  return v;
}

namespace {

std::vector<int> face_ids(const PlanarMap& m, int& faces) {
  std::vector<int> face(m.darts(), -1);
  faces = 0;
  for (int d = 0; d < m.darts(); ++d) {
    if (face[d] >= 0) continue;
    for (int e = d; face[e] < 0; e = m.face_next(e)) face[e] = faces;
    ++faces;
  }
  return face;
}

}  // namespace

std::vector<PlanarMap> flype_neighbors(const PlanarMap& m) {
  std::vector<PlanarMap> out;
  const int D = m.darts(), V = m.vertices;
  int faces = 0;
  auto face = face_ids(m, faces);
  std::vector<char> in_s(V);
  std::vector<int> stack;
  for (int A = 0; A < D; ++A) {
    // c's darts counterclockwise: A, B, C, Dd; A and Dd run into the tangle
    const int c = m.vertex[A];
    const int B = m.next[A], C = m.next[B], Dd = m.next[C];
    if (m.next[Dd] != A) continue;
    const int fc = face[A];
    const int ftop = face[m.twin[A]] == fc ? face[A] : face[m.twin[A]];
    const int fbot = face[Dd] == fc ? face[m.twin[Dd]] : face[Dd];
    if (ftop == fc || fbot == fc) continue;
    auto same_edge = [&](int e, int x) { return e == x || e == m.twin[x]; };
    for (int z1 = 0; z1 < D; ++z1) {
      if (face[z1] != ftop || same_edge(z1, A) || same_edge(z1, Dd)) continue;
      const int fright = face[m.twin[z1]];
      for (int z2 = 0; z2 < D; ++z2) {
        if (face[z2] != fright || face[m.twin[z2]] != fbot) continue;
        if (same_edge(z2, z1) || same_edge(z2, A) || same_edge(z2, Dd)) continue;
        // the tangle: everything reachable from A's far end without the four cut edges
        std::fill(in_s.begin(), in_s.end(), 0);
        auto cut = [&](int d) {
          return same_edge(d, A) || same_edge(d, Dd) || same_edge(d, z1) || same_edge(d, z2);
        };
        stack.assign(1, m.vertex[m.twin[A]]);
        in_s[stack[0]] = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int d = 0; d < D; ++d) {
            if (m.vertex[d] != v || cut(d)) continue;
            int w = m.vertex[m.twin[d]];
            if (!in_s[w]) in_s[w] = 1, stack.push_back(w);
          }
        }
        if (in_s[c] || !in_s[m.vertex[m.twin[Dd]]]) continue;
        const int a1 = m.vertex[z1], b1 = m.vertex[m.twin[z1]];
        const int a2 = m.vertex[z2], b2 = m.vertex[m.twin[z2]];
        if (in_s[a1] == in_s[b1] || in_s[a2] == in_s[b2]) continue;
        const int dNE = in_s[a1] ? z1 : m.twin[z1];
        const int dSE = in_s[a2] ? z2 : m.twin[z2];
        const int dNW = m.twin[A], dSW = m.twin[Dd];
        const int u1 = m.twin[dNE], u2 = m.twin[dSE];
        const int y1 = m.twin[B], y2 = m.twin[C];
        if (m.vertex[u1] == c || m.vertex[u2] == c || in_s[m.vertex[y1]] || in_s[m.vertex[y2]]) continue;
        PlanarMap f = m;
        for (int d = 0; d < D; ++d)
          if (in_s[m.vertex[d]]) std::swap(f.next[d], f.prev[d]);
        auto link = [&](int x, int y) { f.twin[x] = y, f.twin[y] = x; };
        link(y1, dSW);
        link(y2, dNW);
        link(A, u1);
        link(B, dSE);
        link(C, dNE);
        link(Dd, u2);
        int nf = 0;
        face_ids(f, nf);
        if (V - D / 2 + nf != 2) throw DomainError("flype broke planarity");
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

int FlypeClasses::classify(const PlanarMap& m) {
  auto code = canonical_map_code(m);
  if (auto it = ids_.find(code); it != ids_.end()) return it->second;
  const int id = next_++;
  std::vector<PlanarMap> todo{m};
  ids_.emplace(std::move(code), id);
  while (!todo.empty()) {
    PlanarMap cur = std::move(todo.back());
    todo.pop_back();
    for (auto& nb : flype_neighbors(cur)) {
      auto k = canonical_map_code(nb);
      if (ids_.emplace(std::move(k), id).second) todo.push_back(std::move(nb));
    }
  }
  return id;
}

}  // namespace meander
