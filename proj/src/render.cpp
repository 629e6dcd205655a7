#include "meander/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>

#include "meander/errors.hpp"

namespace meander {

RenderStyle parse_render_style(std::string_view s) {
  if (s == "shadow") return RenderStyle::shadow;
  if (s == "alternating") return RenderStyle::alternating;
  if (s == "checkerboard") return RenderStyle::checkerboard;
  throw MalformedInput("unknown render style: " + std::string(s));
}

const char* render_style_name(RenderStyle s) {
  switch (s) {
    case RenderStyle::shadow: return "shadow";
    case RenderStyle::alternating: return "alternating";
    case RenderStyle::checkerboard: return "checkerboard";
  }
  return "";
}

namespace {

constexpr const char* kInk = "#222222";
constexpr const char* kFill[2] = {"#f3d27a", "#7fa7d6"};
constexpr double kStroke = 0.15;

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Point {
  double x = 0, y = 0;
};

// Straight segment or semicircle ending at `to`.
struct Step {
  bool arc = false;
  double r = 0;
  bool sweep = false;
  Point to;
};

struct ArcInfo {
  bool upper = false;
  int from = 0, to = 0;
};

struct Piece {
  Point start;
  std::vector<Step> steps;
  std::optional<ArcInfo> arc;

  Point end() const { return steps.empty() ? start : steps.back().to; }
  Piece reversed() const {
    Piece p;
    p.start = end();
    for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
      Step s = steps[i];
      s.to = i > 0 ? steps[i - 1].to : start;
      s.sweep = !s.sweep;
      p.steps.push_back(s);
    }
    return p;
  }
};

double X(int position) { return 2.0 * position; }

Piece arc_piece(int a, int b, bool upper) {
  Piece p;
  p.start = {X(a), 0};
  p.steps.push_back({true, static_cast<double>(std::abs(a - b)), upper == (a < b), {X(b), 0}});
  p.arc = ArcInfo{upper, a, b};
  return p;
}

Piece poly_piece(Point start, std::initializer_list<Point> pts) {
  Piece p;
  p.start = start;
  for (auto q : pts) p.steps.push_back({false, 0, false, q});
  return p;
}

std::string path_data(const std::vector<const Piece*>& pieces, bool close) {
  std::string s = "M" + num(pieces[0]->start.x) + " " + num(pieces[0]->start.y);
  for (const Piece* p : pieces)
    for (const Step& st : p->steps) {
      if (st.arc)
        s += " A" + num(st.r) + " " + num(st.r) + " 0 0 " + (st.sweep ? "1 " : "0 ") + num(st.to.x) + " " +
             num(st.to.y);
      else
        s += " L" + num(st.to.x) + " " + num(st.to.y);
    }
  if (close) s += " Z";
  return s;
}

// Shoelace area with semicircles sampled.
double signed_area(const std::vector<Piece>& pieces) {
  std::vector<Point> pts;
  for (const auto& p : pieces) {
    Point cur = p.start;
    pts.push_back(cur);
    for (const auto& st : p.steps) {
      if (st.arc) {
        Point c{(cur.x + st.to.x) / 2, (cur.y + st.to.y) / 2};
        double t0 = std::atan2(cur.y - c.y, cur.x - c.x);
        for (int k = 1; k < 32; ++k) {
          double t = t0 + (st.sweep ? 1 : -1) * std::numbers::pi * k / 32;
          pts.push_back({c.x + st.r * std::cos(t), c.y + st.r * std::sin(t)});
        }
      }
      pts.push_back(st.to);
      cur = st.to;
    }
  }
  double a = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

struct Canvas {
  int n = 0;
  double h = 0;
  std::string body;

  std::string finish() const {
    double x0 = -1, y0 = -h - 1, w = 2.0 * n + 4, ht = 2 * h + 2;
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " +
         num(ht) + "\" width=\"" + num(w * 12) + "\" height=\"" + num(ht * 12) + "\">\n";
    s += body;
    s += "</svg>\n";
    return s;
  }
};

int nesting_depth(const std::vector<ArcInfo>& all, const ArcInfo& a) {
  int lo = std::min(a.from, a.to), hi = std::max(a.from, a.to), d = 0;
  for (const auto& b : all) {
    if (b.upper != a.upper) continue;
    if (std::min(b.from, b.to) < lo && std::max(b.from, b.to) > hi) ++d;
  }
  return d;
}

std::string stroke_element(const Piece& p, const std::vector<ArcInfo>& arcs, const std::string& extra = "") {
  std::string s = "  <path";
  if (p.arc) {
    const ArcInfo& a = *p.arc;
    s += " class=\"arc\" data-side=\"" + std::string(a.upper ? "upper" : "lower") + "\" data-from=\"" +
         std::to_string(a.from) + "\" data-to=\"" + std::to_string(a.to) + "\" data-radius=\"" +
         std::to_string(std::abs(a.from - a.to)) + "\" data-depth=\"" + std::to_string(nesting_depth(arcs, a)) +
         "\"";
  } else {
    s += " class=\"strand\"";
  }
  s += extra + " d=\"" + path_data({&p}, false) + "\" fill=\"none\" stroke=\"" + kInk + "\" stroke-width=\"" +
       num(kStroke) + "\"/>\n";
  return s;
}

// Geometry of every diagram edge, indexed like Diagram edges.
std::vector<Piece> edge_geometry(const Diagram& d, int& n_out) {
  const auto& lay = *d.layout();
  const auto& comps = d.gauss().components;
  auto bad = [] { throw DomainError("diagram layout does not match its gauss code"); };
  std::vector<Piece> edges;

  if (!lay.loops.empty()) {
    int n = 0;
    for (const auto& l : lay.loops) n += static_cast<int>(l.size());
    n_out = n;
    double h = n + 1;
    if (comps.size() != lay.loops.size() + 1 || static_cast<int>(comps[0].size()) != n) bad();
    for (int i = 0; i < n; ++i)
      if (std::abs(comps[0][i]) != i + 1) bad();
    for (int i = 1; i < n; ++i) edges.push_back(poly_piece({X(i), 0}, {{X(i + 1), 0}}));
    edges.push_back(poly_piece({X(n), 0}, {{X(n + 1), 0}, {X(n + 1), -h}, {0, -h}, {0, 0}, {X(1), 0}}));
    for (size_t k = 0; k < lay.loops.size(); ++k) {
      const auto& loop = lay.loops[k];
      if (comps[k + 1].size() != loop.size()) bad();
      for (size_t j = 0; j < loop.size(); ++j) {
        if (std::abs(comps[k + 1][j]) != loop[j]) bad();
        edges.push_back(arc_piece(loop[j], loop[(j + 1) % loop.size()], j % 2 == 0));
      }
    }
    return edges;
  }

  const auto& perm = lay.permutation;
  const int n = static_cast<int>(perm.size());
  n_out = n;
  if (n == 0) bad();
  const double h = n + 1;
  const int p1 = perm.front(), pn = perm.back();
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(comps[0].size()) < n || std::abs(comps[0][i]) != i + 1) bad();
  for (int i = 1; i < n; ++i) edges.push_back(poly_piece({X(i), 0}, {{X(i + 1), 0}}));

  if (n % 2 == 0) {
    if (comps.size() != 2 || static_cast<int>(comps[1].size()) != n) bad();
    for (int j = 0; j < n; ++j)
      if (std::abs(comps[1][j]) != perm[j]) bad();
    edges.push_back(poly_piece({X(n), 0}, {{X(n + 1), 0}, {X(n + 1), -h}, {0, -h}, {0, 0}, {X(1), 0}}));
    for (int j = 0; j + 1 < n; ++j) edges.push_back(arc_piece(perm[j], perm[j + 1], j % 2 == 0));
    edges.push_back(poly_piece({X(pn), 0}, {{X(pn), h}, {X(p1), h}, {X(p1), 0}}));
    return edges;
  }

  if (comps.size() != 1 || static_cast<int>(comps[0].size()) != 2 * n) bad();
  for (int j = 0; j < n; ++j) {
    int x = lay.reversed ? perm[n - 1 - j] : perm[j];
    if (std::abs(comps[0][n + j]) != x) bad();
  }
  // the first loose end comes from below, the last one leaves upward
  if (!lay.reversed) {
    edges.push_back(poly_piece({X(n), 0}, {{X(n + 1), 0}, {X(n + 1), h}, {X(p1), h}, {X(p1), 0}}));
    for (int j = 0; j + 1 < n; ++j) edges.push_back(arc_piece(perm[j], perm[j + 1], j % 2 == 0));
    edges.push_back(poly_piece({X(pn), 0}, {{X(pn), -h}, {0, -h}, {0, 0}, {X(1), 0}}));
  } else {
    edges.push_back(poly_piece({X(n), 0}, {{X(n + 1), 0}, {X(n + 1), -h}, {X(pn), -h}, {X(pn), 0}}));
    for (int j = n - 1; j > 0; --j) edges.push_back(arc_piece(perm[j], perm[j - 1], (j - 1) % 2 == 0));
    edges.push_back(poly_piece({X(p1), 0}, {{X(p1), h}, {0, h}, {0, 0}, {X(1), 0}}));
  }
  return edges;
}

}  // namespace

std::optional<Diagram> with_meander_layout(const Diagram& d) {
  if (d.layout()) return d;
  const auto& comps = d.gauss().components;
  const int n = d.crossing_count();
  if (n == 0 || comps.empty() || static_cast<int>(comps[0].size()) < n) return std::nullopt;
  std::vector<int> axis(n), curve;
  for (int i = 0; i < n; ++i) {
    if (std::abs(comps[0][i]) != i + 1) return std::nullopt;
    axis[i] = comps[0][i] > 0 ? 1 : -1;
  }
  if (comps.size() == 1 && static_cast<int>(comps[0].size()) == 2 * n) curve.assign(comps[0].begin() + n, comps[0].end());
  else if (comps.size() == 2 && static_cast<int>(comps[0].size()) == n) curve = comps[1];
  else return std::nullopt;
  std::vector<int> perm;
  for (int v : curve) perm.push_back(std::abs(v));
  for (int pass = 0; pass < 2; ++pass) {
    if (validate_meander_permutation(perm)) {
      Diagram c = close_meander(perm, axis);
      if (c.gauss() == d.gauss() && c.signs() == d.signs()) return c;
    }
    std::reverse(perm.begin(), perm.end());
  }
  return std::nullopt;
}

std::string render_open_meander(const OpenMeander& m) {
  const int n = m.order;
  Canvas cv;
  cv.n = n;
  cv.h = n + 1;
  const auto& p = m.permutation;
  std::vector<Piece> pieces;
  std::vector<ArcInfo> arcs;
  for (int j = 0; j + 1 < n; ++j) {
    pieces.push_back(arc_piece(p[j], p[j + 1], j % 2 == 0));
    arcs.push_back(*pieces.back().arc);
  }
  // loose ends: in from below, out on the side opposite the last arc
  double out = n % 2 == 1 ? -cv.h : cv.h;
  pieces.push_back(poly_piece({X(p.front()), cv.h}, {{X(p.front()), 0}}));
  pieces.push_back(poly_piece({X(p.back()), 0}, {{X(p.back()), out}}));
  cv.body += "  <path class=\"axis\" d=\"M0.000 0.000 L" + num(X(n + 1)) + " 0.000\" fill=\"none\" stroke=\"" +
             kInk + "\" stroke-width=\"" + num(kStroke) + "\"/>\n";
  for (const auto& pc : pieces) cv.body += stroke_element(pc, arcs);
  return cv.finish();
}

std::string render_diagram(const Diagram& input, RenderStyle style) {
  auto laid = with_meander_layout(input);
  if (!laid) throw DomainError("diagram has no meander layout to draw");
  const Diagram& d = *laid;
  int n = 0;
  std::vector<Piece> edges = edge_geometry(d, n);
  if (static_cast<int>(edges.size()) != d.edge_count()) throw DomainError("diagram layout does not match its edges");
  Canvas cv;
  cv.n = n;
  cv.h = n + 1;
  std::vector<ArcInfo> arcs;
  for (const auto& e : edges)
    if (e.arc) arcs.push_back(*e.arc);

  if (style == RenderStyle::checkerboard) {
    auto faces = checkerboard_faces(d);
    std::vector<std::vector<Piece>> rings(faces.size());
    std::vector<double> area(faces.size());
    size_t outer = 0;
    for (size_t f = 0; f < faces.size(); ++f) {
      for (int dart : faces[f].darts) {
        const Piece& e = edges[std::abs(dart) - 1];
        rings[f].push_back(dart > 0 ? e : e.reversed());
      }
      area[f] = signed_area(rings[f]);
      if (std::abs(area[f]) > std::abs(area[outer])) outer = f;
    }
    cv.body += "  <rect class=\"face outer\" data-color=\"" + std::to_string(faces[outer].color) + "\" x=\"-1.000\" y=\"" +
               num(-cv.h - 1) + "\" width=\"" + num(2.0 * n + 4) + "\" height=\"" + num(2 * cv.h + 2) +
               "\" fill=\"" + kFill[faces[outer].color] + "\"/>\n";
    for (size_t f = 0; f < faces.size(); ++f) {
      if (f == outer) continue;
      std::vector<const Piece*> ptrs;
      for (const auto& pc : rings[f]) ptrs.push_back(&pc);
      cv.body += "  <path class=\"face\" data-color=\"" + std::to_string(faces[f].color) + "\" d=\"" +
                 path_data(ptrs, true) + "\" fill=\"" + kFill[faces[f].color] + "\" stroke=\"none\"/>\n";
    }
  }

  for (int e = 0; e < d.edge_count(); ++e)
    cv.body += stroke_element(edges[e], arcs, " data-component=\"" + std::to_string(d.edge_component(e)) + "\"");

  if (style != RenderStyle::shadow) {
    const auto& axis = d.gauss().components[0];
    for (int i = 1; i <= n; ++i) {
      bool axis_over = axis[i - 1] > 0;
      Point a = axis_over ? Point{X(i) - 0.45, 0} : Point{X(i), -0.3};
      Point b = axis_over ? Point{X(i) + 0.45, 0} : Point{X(i), 0.3};
      std::string seg = "M" + num(a.x) + " " + num(a.y) + " L" + num(b.x) + " " + num(b.y);
      cv.body += "  <g class=\"crossing\" data-position=\"" + std::to_string(i) + "\" data-over=\"" +
                 (axis_over ? "axis" : "curve") + "\">";
      cv.body += "<path d=\"" + seg + "\" stroke=\"#ffffff\" stroke-width=\"0.450\"/>";
      cv.body += "<path d=\"" + seg + "\" stroke=\"" + kInk + "\" stroke-width=\"" + num(kStroke) + "\"/></g>\n";
    }
  }
  return cv.finish();
}

}  // namespace meander
