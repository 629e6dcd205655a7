#include <doctest.h>

#include "meander/catalog.hpp"
#include "meander/search.hpp"

using namespace meander;

namespace {

SearchTarget target(const std::string& name) { return search_target(*reference_diagram(name)); }

}  // namespace

TEST_CASE("meander numbers") {
  auto h = search_meander_diagram(target("4_1"), 9);
  REQUIRE(h.has_value());
  CHECK(h->n == 5);
  CHECK(fingerprint(h->diagram) == target("4_1").fingerprint);
  CHECK(to_dt_code(h->diagram) == h->dt);
  auto t = search_meander_diagram(target("3_1"), 9);
  REQUIRE(t.has_value());
  CHECK(t->n == 3);
  auto k812 = search_meander_diagram(target("8_12"), 11);
  REQUIRE(k812.has_value());
  CHECK(k812->n == 11);
  CHECK_FALSE(search_meander_diagram(target("8_12"), 9).has_value());
}

TEST_CASE("batch search matches single searches") {
  std::vector<SearchTarget> ts{target("6_1"), target("6_2"), target("7_6")};
  SearchStats st;
  auto hits = search_meander_diagrams(ts, 9, &st);
  REQUIRE(hits.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    auto one = search_meander_diagram(ts[i], 9);
    REQUIRE(hits[i].has_value() == one.has_value());
    if (one) CHECK(hits[i]->n == one->n);
  }
  CHECK(st.shadows > 0);
  CHECK(st.assignments > 0);
}

TEST_CASE("ordered shadows") {
  // every meander closure is an ordered shadow
  for (int n = 2; n <= 7; ++n) CHECK(count_ordered_shadows(n) >= static_cast<std::uint64_t>(enumerate_open_meanders(n).size()));
  auto h = search_ogc_diagram(target("7_6"), 9);
  REQUIRE(h.has_value());
  CHECK(h->n == 7);
  CHECK(is_ordered(h->diagram.gauss()));
}

TEST_CASE("ogc minimum of 10_99" * doctest::timeout(120)) {
  auto h = search_ogc_diagram(target("10_99"), 10);
  REQUIRE(h.has_value());
  CHECK(h->n == 10);
}
