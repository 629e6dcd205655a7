#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "meander/catalog.hpp"
#include "meander/errors.hpp"

using namespace meander;

namespace {

const CatalogEntry* find(const Catalog& c, const std::string& name) {
  for (const auto& e : c.entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog rows") {
  Catalog c = load_catalog();
  CHECK(c.entries.size() > 300);
  const CatalogEntry* t = find(c, "3_1");
  REQUIRE(t);
  CHECK(parse_dt_code(t->dt_text) == parse_dt_code("{{3},{4,6,2}}"));
  CHECK(parse_int_sequence(t->short_text) == std::vector<int>{1, -2, 3});
  CHECK(t->verified);
  CHECK(check_entry(*t).ok);

  const CatalogEntry* h = find(c, "2_1^2");
  REQUIRE(h);
  CHECK(h->kind == "link");
  CHECK(parse_dt_code(h->dt_text) == parse_dt_code("{{1,1},{4,2}}"));

  const CatalogEntry* bad = find(c, "9_13");
  REQUIRE(bad);
  CHECK_FALSE(bad->verified);
  CHECK_FALSE(check_entry(*bad).ok);
}

TEST_CASE("verified rows agree with their own codes") {
  for (const auto& e : load_catalog().entries) {
    if (!e.verified) continue;
    EntryCheck k = check_entry(e);
    CHECK_MESSAGE(k.ok, e.source_line);
  }
}

TEST_CASE("short codes") {
  GaussCode g = full_code_from_short({3, -2, 1, 4, -5}, false);
  CHECK(g == parse_gauss_code("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}"));
}

TEST_CASE("names and reference tables") {
  CHECK(name_crossing_number("9_7") == 9);
  CHECK(name_crossing_number("K11a94") == 11);
  CHECK(name_crossing_number("L10a114") == 10);
  CHECK(name_crossing_number("2_1^2") == 2);
  auto r = reference_diagram("4_1");
  REQUIRE(r.has_value());
  CHECK(r->crossing_count() == 4);
  CHECK(lookup_name(*r) == std::optional<std::string>("4_1"));
  CHECK_FALSE(reference_diagram("99_99").has_value());
  CHECK_FALSE(named_diagram("nonsense").has_value());
  CHECK(resolve_fingerprint("5_2").has_value());
  const NameIndex& idx = default_name_index();
  CHECK(idx.fingerprint_of("3_1").has_value());
  CHECK(idx.lookup(*idx.fingerprint_of("3_1")) == std::optional<std::string>("3_1"));
}

TEST_CASE("printed examples") {
  auto ex = load_examples();
  CHECK(ex.size() >= 20);
  CHECK(example_code("ordered code", "7_6") ==
        parse_gauss_code("{1, -2, 3, -4, 5, -6, 7, -5, 4, -1, 2, -7, 6, -3}"));
  CHECK_THROWS_AS(example_code("no such thing"), CatalogError);
}

TEST_CASE("missing or corrupt catalog files") {
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), CatalogError);
  auto p = std::filesystem::temp_directory_path() / "meander_bad_catalog.json";
  std::ofstream(p) << "{\"entries\": [";
  CHECK_THROWS_AS(load_catalog(p), CatalogError);
  std::filesystem::remove(p);
}
