#include <doctest.h>

#include <set>

#include "meander/catalog.hpp"
#include "meander/classify.hpp"
#include "meander/errors.hpp"

using namespace meander;

namespace {

std::set<std::string> names(const CensusRow& r) {
  std::set<std::string> out;
  for (const auto& m : r.members) out.insert(m.name.value_or("?"));
  return out;
}

}  // namespace

TEST_CASE("knot census") {
  const int expect[] = {1, 1, 2, 5, 15, 52};
  for (int i = 0; i < 6; ++i) {
    CensusRow r = census_meander_knots(2 * i + 1, 2);
    CHECK(r.kind == CensusKind::knot);
    CHECK(r.c == 1);
    CHECK(r.type_count == expect[i]);
    CHECK(r.members.size() == static_cast<size_t>(r.type_count));
  }
  CHECK(names(census_meander_knots(7)) == std::set<std::string>{"7_1", "7_2", "7_3", "7_4", "7_5"});
  CHECK(names(census_meander_knots(5)) == std::set<std::string>{"5_1", "5_2"});
}

TEST_CASE("census members are sorted and each closure is counted once") {
  CensusRow r = census_meander_knots(9);
  int diagrams = 0;
  for (size_t i = 0; i < r.members.size(); ++i) {
    if (i) CHECK(r.members[i - 1].dt < r.members[i].dt);
    CHECK(to_dt_code(r.members[i].representative) == r.members[i].dt);
    diagrams += r.members[i].diagrams;
  }
  CHECK(diagrams > 0);
  CHECK(diagrams <= 2 * 262);
  CHECK(r.fingerprint_count <= r.type_count);
}

TEST_CASE("link census") {
  const int expect[] = {1, 1, 2, 3, 8, 17};
  for (int i = 0; i < 6; ++i) CHECK(census_meander_links(2 * i + 2, 2).type_count == expect[i]);
  CensusRow six = census_meander_links(6);
  REQUIRE(six.members.size() == 2);
  for (const auto& m : six.members) CHECK(m.fp.n_components == 2);
}

TEST_CASE("multi-component census") {
  CHECK(census_multicomponent(6, 3).type_count == 1);
  CHECK(census_multicomponent(8, 3).type_count == 2);
  CHECK(census_multicomponent(12, 4, 2).type_count == 4);
  for (const auto& m : census_multicomponent(8, 3).members) CHECK(m.fp.n_components == 3);
  CHECK_THROWS_AS(census_multicomponent(7, 3), DomainError);
}

TEST_CASE("parity is checked") {
  CHECK_THROWS_AS(census_meander_knots(8), DomainError);
  CHECK_THROWS_AS(census_meander_links(7), DomainError);
}

TEST_CASE("names") {
  Diagram d97 = from_dt_code(parse_dt_code("{{9},{4,12,16,18,14,2,10,8,6}}"));
  CHECK(lookup_name(d97) == std::optional<std::string>("9_7"));
  Diagram hopf = close_open_meander(meander_from_permutation({1, 2}));
  CHECK(lookup_name(hopf) == std::optional<std::string>("2_1^2"));
  // a 13-crossing alternating closure is past every table
  Diagram big = close_open_meander(meander_from_permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}));
  CHECK_FALSE(lookup_name(big).has_value());
  CHECK(kind_name(parse_kind("multi")) == "multi");
  CHECK_THROWS(parse_kind("tangle"));
}

TEST_CASE("csv and json") {
  CensusRow r = census_meander_knots(7);
  std::string csv = export_census_csv({r});
  CHECK(csv.find("7,knot,1,5\n") != std::string::npos);
  std::string header = export_census_csv({});
  CHECK(header == "n,kind,c,count\n");
  auto back = import_census_csv(csv);
  REQUIRE(back.size() == 1);
  CHECK(back[0].n == 7);
  CHECK(back[0].kind == CensusKind::knot);
  CHECK(back[0].type_count == 5);
  CHECK(import_census_csv(header).empty());

  auto j = import_census_json(export_census_json({r, census_meander_links(6)}));
  REQUIRE(j.size() == 2);
  CHECK(j[0].type_count == 5);
  CHECK(j[0].members.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(j[0].members[i].dt == r.members[i].dt);
    CHECK(j[0].members[i].name == r.members[i].name);
    CHECK(j[0].members[i].fp == r.members[i].fp);
  }
  CHECK(j[1].kind == CensusKind::link);
  CHECK(export_census_json(j) == export_census_json({r, census_meander_links(6)}));
  CHECK_THROWS_AS(import_census_csv("n,kind,c,count\n7,knot\n"), MalformedInput);
}
