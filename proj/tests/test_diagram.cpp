#include <doctest.h>

#include <map>

#include "meander/catalog.hpp"
#include "meander/diagram.hpp"
#include "meander/errors.hpp"
#include "meander/invariants.hpp"

using namespace meander;

namespace {

Diagram closure(std::vector<int> p) { return close_open_meander(meander_from_permutation(std::move(p))); }

bool faces_properly_colored(const Diagram& d) {
  auto faces = checkerboard_faces(d);
  std::map<int, int> color;  // dart -> face color
  for (const auto& f : faces)
    for (int dart : f.darts) color[dart] = f.color;
  for (int e = 1; e <= d.edge_count(); ++e)
    if (!color.count(e) || !color.count(-e) || color[e] == color[-e]) return false;
  return true;
}

}  // namespace

TEST_CASE("closure of an open meander") {
  Diagram d = closure({1, 8, 5, 6, 7, 4, 3, 2, 9});
  CHECK(d.gauss() == parse_gauss_code("{-1, 2, -3, 4, -5, 6, -7, 8, -9, 1, -8, 5, -6, 7, -4, 3, -2, 9}"));
  CHECK(to_dt_code(d) == parse_dt_code("{{9}, {4, 12, 16, 18, 14, 2, 10, 8, 6}}"));
  CHECK(d.component_count() == 1);
  DiagramFlags f = analyze(d);
  CHECK(f.reduced);
  CHECK(f.prime);
  CHECK(f.alternating);
  CHECK(f.positive);
}

TEST_CASE("small closures") {
  Diagram hopf = closure({1, 2});
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.crossing_count() == 2);
  CHECK(to_dt_code(hopf) == parse_dt_code("{{1,1},{4,2}}"));

  Diagram one = closure({1});
  CHECK(one.crossing_count() == 1);
  CHECK_FALSE(analyze(one).reduced);
  CHECK(remove_nugatory(one).crossing_count() == 0);
}

TEST_CASE("meandric system closures") {
  auto sys = enumerate_meandric_systems(2, 1);
  REQUIRE(sys.size() == 1);
  Diagram d = close_meandric_system(sys[0]);
  CHECK(d.component_count() == 2);
  CHECK(to_dt_code(d) == parse_dt_code("{{1,1},{4,2}}"));

  // a loop that never meets the axis cannot occur in a system, but a loop
  // that meets only part of the picture splits off once the axis is dropped
  bool found_split = false;
  for (const auto& s : enumerate_meandric_systems(4, 2)) {
    Diagram x = close_meandric_system(s);
    std::vector<int> loops{1, 2};
    if (analyze(sublink(x, loops)).split) found_split = true;
  }
  CHECK(found_split);
}

TEST_CASE("every table closure is reduced, prime, alternating and positive") {
  for (int n : {3, 5, 7, 9})
    for (const auto& m : enumerate_open_meanders(n)) {
      Diagram d = close_open_meander(m);
      DiagramFlags f = analyze(d);
      CHECK(f.alternating);
      CHECK(f.positive);
    }
}

TEST_CASE("a composite closure is detected") {
  LaurentPolynomial t = normalized_bracket(closure({3, 2, 1}));
  Fingerprint granny = fingerprint_from_bracket(1, t * t);
  bool found = false;
  for (const auto& m : enumerate_open_meanders(7)) {
    Diagram d = close_open_meander(m);
    Diagram r = remove_nugatory(d);
    if (!analyze(d).prime && r.crossing_count() == 6 && !analyze(r).prime && fingerprint(d) == granny) found = true;
  }
  CHECK(found);
}

TEST_CASE("gauss code realization") {
  Diagram t = realize_gauss_code(parse_gauss_code("{-1, 2, -3, 1, -2, 3}"));
  CHECK(t.crossing_count() == 3);
  CHECK(t.face_cycles() == 5);
  Diagram f8 = realize_gauss_code(parse_gauss_code("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}"));
  CHECK(f8.crossing_count() == 5);
  // odd interlacing
  CHECK_THROWS_AS(realize_gauss_code(parse_gauss_code("{1, -2, -1, 2}")), RealizabilityError);
  CHECK_THROWS_AS(realize_gauss_code(parse_gauss_code("{1, 2, -3, -1, -2, 4, 3, -4}")), RealizabilityError);
  CHECK_THROWS_AS(parse_gauss_code("{1, 2"), MalformedInput);
  CHECK_THROWS_AS(validate_gauss_code(parse_gauss_code("{1, 1, -2, -2}")), MalformedInput);
}

TEST_CASE("dt codes") {
  Diagram k = from_dt_code(parse_dt_code("{{12},{6,14,10,24,20,4,18,2,22,12,8,16}}"));
  CHECK(k.crossing_count() == 12);
  CHECK(k.component_count() == 1);
  for (const auto& m : enumerate_open_meanders(7)) {
    Diagram d = close_open_meander(m);
    DTCode c = to_dt_code(d);
    CHECK(fingerprint(from_dt_code(c)) == fingerprint(d));
    CHECK(to_dt_code(from_dt_code(c)) == c);
  }
  CHECK(format_dt_code(parse_dt_code("{4, 6, 2}")) == "{{3}, {4, 6, 2}}");
}

TEST_CASE("ordered forms") {
  GaussCode g76 = parse_gauss_code("{1, -2, 3, -4, 5, -6, 7, -5, 4, -1, 2, -7, 6, -3}");
  CHECK(is_ordered(g76));
  // rotate so that the code no longer starts with the ordered half
  GaussCode rot = g76;
  std::rotate(rot.components[0].begin(), rot.components[0].begin() + 5, rot.components[0].end());
  CHECK_FALSE(is_ordered(rot));
  auto back = find_ordered_form(rot);
  REQUIRE(back.has_value());
  CHECK(is_ordered(*back));
  CHECK(fingerprint(realize_gauss_code(*back)) == fingerprint(realize_gauss_code(g76)));

  for (const auto& m : enumerate_open_meanders(7)) CHECK(find_ordered_form(close_open_meander(m).gauss()).has_value());

  auto d818 = reference_diagram("8_18");
  REQUIRE(d818.has_value());
  CHECK_FALSE(find_ordered_form(d818->gauss()).has_value());
}

TEST_CASE("checkerboard faces") {
  CHECK(checkerboard_faces(closure({3, 2, 1})).size() == 5);
  CHECK(checkerboard_faces(closure({1, 8, 5, 6, 7, 4, 3, 2, 9})).size() == 11);
  for (int n = 1; n <= 7; ++n)
    for (const auto& m : enumerate_open_meanders(n)) {
      Diagram d = close_open_meander(m);
      CHECK(checkerboard_faces(d).size() == static_cast<size_t>(n + 2));
      CHECK(faces_properly_colored(d));
    }
}

TEST_CASE("mirror") {
  Diagram t = closure({3, 2, 1});
  Diagram mt = mirror(t);
  CHECK(mirror(mt).gauss() == t.gauss());
  CHECK(mirror(mt).signs() == t.signs());
  CHECK(kauffman_bracket(mt) == kauffman_bracket(t).inverted());
  CHECK(mt.writhe() == -t.writhe());
  Diagram f8 = realize_gauss_code(parse_gauss_code("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}"));
  CHECK(fingerprint(mirror(f8)) == fingerprint(f8));
  CHECK(normalized_bracket(mirror(f8)) == normalized_bracket(f8).inverted());
}

TEST_CASE("sublinks") {
  Diagram d = closure({1, 2});
  std::vector<int> first{0};
  Diagram a = sublink(d, first);
  CHECK(a.component_count() == 1);
  CHECK(a.crossing_count() == 0);
}
