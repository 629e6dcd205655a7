#include <doctest.h>

#include "meander/algebra.hpp"
#include "meander/catalog.hpp"
#include "meander/errors.hpp"

using namespace meander;

namespace {

Diagram closure(std::vector<int> p) { return close_open_meander(meander_from_permutation(std::move(p))); }
Fingerprint fp_of(const std::string& name) { return fingerprint(*reference_diagram(name)); }
Fingerprint unknot() { return fingerprint(realize_gauss_code(GaussCode{{{}}})); }

}  // namespace

TEST_CASE("sums follow the parity rule") {
  Diagram t = closure({3, 2, 1});
  Diagram hopf = closure({1, 2});
  CHECK(meander_sum(t, t).component_count() == 2);
  CHECK(meander_sum(t, hopf).component_count() == 1);
  CHECK(meander_sum(hopf, t).component_count() == 1);
  CHECK(meander_sum(hopf, hopf).component_count() == 2);
  Diagram s = meander_sum(t, closure({5, 4, 3, 2, 1}));
  CHECK(s.crossing_count() == 8);
  REQUIRE(s.layout().has_value());
  CHECK(s.layout()->permutation == std::vector<int>{3, 2, 1, 8, 7, 6, 5, 4});
  CHECK_THROWS_AS(meander_sum(*reference_diagram("3_1"), t), DomainError);
}

TEST_CASE("trefoil plus its mirror image") {
  Diagram t = closure({3, 2, 1});
  Fingerprint unlink = fingerprint(realize_gauss_code(GaussCode{{{}, {}}}));
  CHECK(fingerprint(meander_sum(t, mirror(t))) == unlink);
  Diagram c5 = closure({5, 4, 3, 2, 1});
  CHECK(fingerprint(meander_sum(c5, mirror(c5))) == unlink);
}

TEST_CASE("axis signs") {
  Diagram t = closure({3, 2, 1});
  CHECK(axis_signs_of(t) == alternating_axis_signs(3));
}

TEST_CASE("chord diagrams") {
  GaussCode f8 = parse_gauss_code("{1, -2, 3, -4, 2, -1, 4, -3}");
  ChordDiagram c = chord_diagram(f8);
  CHECK(c.n == 4);
  CHECK(c.circle == std::vector<int>{1, 2, 3, 4, 2, 1, 4, 3});
  CHECK(c.chords[0] == std::pair<int, int>{0, 5});
  CHECK(c.chords[1] == std::pair<int, int>{4, 1});
  CHECK(gauss_from_chords(c) == f8);
  CHECK(chord_diagram(parse_gauss_code("{1, -1}")).chords.size() == 1);
}

TEST_CASE("knot products") {
  GaussCode g92 = example_code("ordered code", "9_2"), g94 = example_code("ordered code", "9_4");
  GaussCode p = ogc_product_code(g92, g94);
  // second halves glued, the second one negated
  std::vector<int> expect(g92.components[0].begin() + 9, g92.components[0].end());
  for (auto it = g94.components[0].begin() + 9; it != g94.components[0].end(); ++it) expect.push_back(-*it);
  CHECK(p.components[0] == expect);
  CHECK(lookup_name(ogc_product_knots(g92, g94)) == std::optional<std::string>("9_6"));

  for (auto [name, torus] : {std::pair{"3_1", "3_1"}, {"5_1", "5_1"}, {"5_2", "5_1"}, {"7_4", "7_1"}}) {
    GaussCode g = ordered_code_of(*named_diagram(name));
    CHECK(is_ordered(g));
    CHECK(fingerprint(ogc_product_knots(g, g)) == fp_of(torus));
    CHECK(fingerprint(ogc_product_knots(g, reflect_code(g))) == unknot());
  }
  CHECK_THROWS_AS(ogc_product_code(g92, parse_gauss_code("{1, -2, 3, -1, 2, -3}")), DomainError);
  GaussCode even = parse_gauss_code("{1, -2, 3, -4, 2, -1, 4, -3}");
  CHECK_THROWS_AS(ogc_product_code(even, even), DomainError);
}

TEST_CASE("link products") {
  GaussCode g81 = example_code("ordered code", "8_1"), g83 = example_code("ordered code", "8_3");
  Diagram l = ogc_product_links(g81, g83);
  CHECK(l.component_count() == 2);
  CHECK(lookup_name(l) == std::optional<std::string>("8_1^2"));
  auto f8 = find_ordered_form(reference_diagram("4_1")->gauss());
  REQUIRE(f8.has_value());
  Diagram sq = ogc_product_links(*f8, *f8);
  CHECK(sq.component_count() == 2);
  CHECK(sq.crossing_count() == 4);
  GaussCode big = ogc_link_product_code(example_code("link 7 5"), example_code("link 6*4.2:20.2"));
  CHECK(big == example_code("product of links 75 and 6*4.2:20.2"));
  CHECK(ordered_link_form(big) == example_code("ordered form of that product"));
  CHECK_THROWS_AS(ogc_link_product_code(example_code("ordered code", "9_2"), g81), DomainError);
}
