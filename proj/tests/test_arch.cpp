#include <doctest.h>

#include <algorithm>
#include <set>

#include "meander/arch.hpp"
#include "meander/errors.hpp"

using namespace meander;

namespace {

// All perfect noncrossing matchings of 2k points, by brute force over pairings.
int brute_noncrossing(int k) {
  int count = 0;
  std::vector<int> partner(2 * k + 1, 0);
  auto rec = [&](auto&& self) -> void {
    int i = 1;
    while (i <= 2 * k && partner[i]) ++i;
    if (i > 2 * k) {
      for (int a = 1; a <= 2 * k; ++a)
        for (int c = 1; c <= 2 * k; ++c) {
          int b = partner[a], d = partner[c];
          if (a < c && c < b && b < d) return;
        }
      ++count;
      return;
    }
    for (int j = i + 1; j <= 2 * k; ++j) {
      if (partner[j]) continue;
      partner[i] = j, partner[j] = i;
      self(self);
      partner[i] = partner[j] = 0;
    }
  };
  rec(rec);
  return count;
}

}  // namespace

TEST_CASE("arch configurations are counted by Catalan numbers") {
  CHECK(enumerate_arch_configurations(0, 0).size() == 1);
  CHECK(enumerate_arch_configurations(3, 0).size() == 5);
  CHECK(enumerate_arch_configurations(5, 0).size() == 42);
  for (int k = 0; k <= 5; ++k) CHECK(arch_words(k, 0).size() == static_cast<size_t>(brute_noncrossing(k)));
}

TEST_CASE("loose ends sit at depth zero") {
  // one loose end among k arcs: k+1 slots at depth 0 per word shape
  CHECK(arch_words(1, 1).size() == 2);
  CHECK(arch_words(0, 2).size() == 1);
  for (const auto& w : arch_words(3, 2)) {
    ArchConfiguration a = dyck_decode(w);
    REQUIRE(a.loose_ends().size() == 2);
    for (int p : a.loose_ends()) CHECK(a.depth(p) == 0);
  }
}

TEST_CASE("words come out sorted and distinct") {
  auto ws = arch_words(4, 1);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  CHECK(std::set<DecoratedDyckWord>(ws.begin(), ws.end()).size() == ws.size());
}

TEST_CASE("encode and decode") {
  ArchConfiguration one(2, {{1, 2}});
  CHECK(dyck_encode(one).text == "()");
  CHECK(dyck_encode(ArchConfiguration(4, {{1, 4}, {2, 3}})).text == "(())");
  CHECK(dyck_decode(parse_dyck_word("()")).arcs() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(dyck_decode(parse_dyck_word("()()")).arcs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(dyck_decode(parse_dyck_word(")(")), MalformedInput);
  CHECK_THROWS_AS(parse_dyck_word("(x)"), MalformedInput);
  for (int loose = 0; loose <= 2; ++loose)
    for (const auto& w : arch_words(4, loose)) CHECK(dyck_encode(dyck_decode(w)) == w);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(ArchConfiguration(4, {{1, 3}, {2, 4}}), MalformedInput);
  CHECK_THROWS_AS(ArchConfiguration(4, {{1, 2}, {2, 3}}), MalformedInput);
  CHECK_THROWS_AS(ArchConfiguration(3, {}), MalformedInput);
}

TEST_CASE("depth") {
  ArchConfiguration a = dyck_decode(parse_dyck_word("(()(()))"));
  CHECK(a.depth(1) == 0);
  CHECK(a.depth(2) == 1);
  CHECK(a.depth(5) == 2);
  CHECK(a.max_depth() == 3);  // levels of nesting, a lone arc is 1
  CHECK(a.partner(1) == 8);
}
