#include <doctest.h>

#include <map>
#include <regex>
#include <set>

#include "meander/catalog.hpp"
#include "meander/errors.hpp"
#include "meander/render.hpp"

using namespace meander;

namespace {

struct SvgArc {
  std::string side;
  int from, to, depth;
};

std::vector<SvgArc> arcs_of(const std::string& svg) {
  static const std::regex re(
      "class=\"arc\" data-side=\"(upper|lower)\" data-from=\"(\\d+)\" data-to=\"(\\d+)\" data-radius=\"\\d+\" "
      "data-depth=\"(\\d+)\"");
  std::vector<SvgArc> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back({(*it)[1], std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  return out;
}

size_t count(const std::string& s, const std::string& what) {
  size_t n = 0;
  for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

Diagram closure(std::vector<int> p) { return close_open_meander(meander_from_permutation(std::move(p))); }

}  // namespace

TEST_CASE("open meander drawing keeps the arch structure") {
  OpenMeander m = meander_from_permutation({1, 10, 9, 4, 3, 2, 5, 8, 7, 6});
  std::string svg = render_open_meander(m);
  std::set<std::pair<int, int>> up, low;
  for (const auto& a : arcs_of(svg)) {
    auto key = std::minmax(a.from, a.to);
    const ArchConfiguration& side = a.side == "upper" ? m.upper : m.lower;
    CHECK(a.depth == side.depth(key.first));
    (a.side == "upper" ? up : low).insert(key);
  }
  CHECK(up == std::set<std::pair<int, int>>(m.upper.arcs().begin(), m.upper.arcs().end()));
  CHECK(low == std::set<std::pair<int, int>>(m.lower.arcs().begin(), m.lower.arcs().end()));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("checkerboard trefoil") {
  std::string svg = render_diagram(closure({3, 2, 1}), RenderStyle::checkerboard);
  CHECK(count(svg, "class=\"face") == 5);
  CHECK(count(svg, "class=\"face outer\"") == 1);
  size_t c0 = count(svg, "data-color=\"0\""), c1 = count(svg, "data-color=\"1\"");
  CHECK(c0 + c1 == 5);
  CHECK(std::min(c0, c1) == 2);
  CHECK(count(svg, "class=\"crossing\"") == 3);
}

TEST_CASE("styles") {
  Diagram d = closure({1, 8, 5, 6, 7, 4, 3, 2, 9});
  std::string shadow = render_diagram(d, RenderStyle::shadow);
  std::string alt = render_diagram(d, RenderStyle::alternating);
  CHECK(count(shadow, "class=\"crossing\"") == 0);
  CHECK(count(alt, "class=\"crossing\"") == 9);
  CHECK(count(alt, "class=\"face") == 0);
  CHECK(parse_render_style("checkerboard") == RenderStyle::checkerboard);
  CHECK(std::string(render_style_name(RenderStyle::shadow)) == "shadow");
  CHECK_THROWS_AS(parse_render_style("plaid"), MalformedInput);
}

TEST_CASE("single crossing and systems") {
  std::string one = render_diagram(closure({1}), RenderStyle::alternating);
  CHECK(count(one, "class=\"crossing\"") == 1);
  CHECK(count(one, "class=\"strand\"") >= 1);
  for (const auto& s : enumerate_meandric_systems(6, 2)) {
    std::string svg = render_diagram(close_meandric_system(s), RenderStyle::checkerboard);
    CHECK(count(svg, "class=\"face") == 8);
  }
}

TEST_CASE("layouts are recovered from codes") {
  Diagram d = closure({1, 8, 5, 6, 7, 4, 3, 2, 9});
  Diagram bare = realize_gauss_code(d.gauss());
  CHECK_FALSE(bare.layout().has_value());
  auto back = with_meander_layout(bare);
  REQUIRE(back.has_value());
  // the realized code may come out as the mirror image, drawn from the far end
  CHECK(back->gauss() == bare.gauss());
  CHECK(back->signs() == bare.signs());
  CHECK(count(render_diagram(*back, RenderStyle::alternating), "class=\"crossing\"") == 9);
  auto ref = reference_diagram("8_18");
  CHECK_FALSE(with_meander_layout(*ref).has_value());
  CHECK_THROWS_AS(render_diagram(*ref, RenderStyle::shadow), DomainError);
}

TEST_CASE("output is deterministic") {
  for (const auto& m : enumerate_open_meanders(7)) {
    Diagram d = close_open_meander(m);
    CHECK(render_diagram(d, RenderStyle::checkerboard) == render_diagram(d, RenderStyle::checkerboard));
    CHECK(render_open_meander(m) == render_open_meander(m));
    CHECK(render_diagram(d, RenderStyle::checkerboard).find("-0.000") == std::string::npos);
  }
}
