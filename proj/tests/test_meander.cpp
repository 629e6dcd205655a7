#include <doctest.h>

#include <algorithm>

#include "meander/errors.hpp"
#include "meander/meander.hpp"

using namespace meander;

TEST_CASE("open meander counts") {
  const std::uint64_t expect[] = {0, 1, 1, 2, 3, 8, 14, 42, 81, 262, 538, 1828, 3926, 13820, 30694, 110954, 252939};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_open_meanders(n).size() == expect[n]);
  for (int n = 1; n <= 16; ++n) CHECK(count_open_meanders(n) == expect[n]);
}

TEST_CASE("enumeration agrees with brute-force permutation filtering") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    size_t valid = 0;
    do {
      if (validate_meander_permutation(p)) ++valid;
    } while (std::next_permutation(p.begin(), p.end()));
    auto ms = enumerate_open_meanders(n);
    // for even n both loose ends lie on one side, so a meander and its
    // reversal both start upward and only one of them is listed
    CHECK(valid == (n % 2 == 0 ? 2 : 1) * ms.size());
    for (const auto& m : ms) CHECK(validate_meander_permutation(m.permutation));
    CHECK(std::is_sorted(ms.begin(), ms.end(), [](const auto& a, const auto& b) { return a.permutation < b.permutation; }));
  }
}

TEST_CASE("permutation validation") {
  CHECK_FALSE(validate_meander_permutation(std::vector<int>{1, 4, 3, 6, 5, 2}));
  CHECK(validate_meander_permutation(std::vector<int>{1, 10, 9, 4, 3, 2, 5, 8, 7, 6}));
  CHECK(validate_meander_permutation(std::vector<int>{1}));
  CHECK_FALSE(validate_meander_permutation(std::vector<int>{1, 3, 2}));
  CHECK_FALSE(validate_meander_permutation(std::vector<int>{1, 1}));
  CHECK_THROWS_AS(meander_from_permutation({1, 4, 3, 6, 5, 2}), NotAMeander);
}

TEST_CASE("words of the order-10 meander") {
  OpenMeander m = meander_from_permutation({1, 10, 9, 4, 3, 2, 5, 8, 7, 6});
  auto [u, l] = words_from_meander(m);
  CHECK(u.text == "(()((())))");
  CHECK(l.text == "1(())1()()");
  CHECK(meander_from_words(u, l).permutation == m.permutation);
  CHECK(m.height() == std::pair<int, int>{4, 2});
  CHECK(meander_from_words(parse_dyck_word("1"), parse_dyck_word("1")).permutation == std::vector<int>{1});
}

TEST_CASE("words round-trip for every meander of order 9") {
  for (const auto& m : enumerate_open_meanders(9)) {
    auto [u, l] = words_from_meander(m);
    CHECK(meander_from_words(u, l).permutation == m.permutation);
  }
}

TEST_CASE("word pairs that trace two loops are not meanders") {
  // upper 1()1, lower 1()1: the middle arcs close into a loop of their own
  CHECK_THROWS_AS(meander_from_words(parse_dyck_word("1()1"), parse_dyck_word("1()1")), NotAMeander);
}

TEST_CASE("meandric systems") {
  CHECK(enumerate_meandric_systems(2, 1).size() == 1);
  // brute force: every pair of closed arch configurations, classified by loop count
  for (int half = 1; half <= 4; ++half) {
    auto cfgs = enumerate_arch_configurations(half, 0);
    std::vector<size_t> by_loops(2 * half + 1, 0);
    for (const auto& a : cfgs)
      for (const auto& b : cfgs) ++by_loops[trace_loops(a, b).size()];
    for (int k = 1; k <= half; ++k) CHECK(enumerate_meandric_systems(2 * half, k).size() == by_loops[k]);
  }
  CHECK(enumerate_meandric_systems(4, 1).size() == 2);
  CHECK(enumerate_meandric_systems(4, 2).size() == 2);
  for (const auto& s : enumerate_meandric_systems(6, 2)) {
    int total = 0;
    for (const auto& loop : s.loops) {
      CHECK(loop.size() % 2 == 0);
      total += static_cast<int>(loop.size());
      CHECK(loop.front() == *std::min_element(loop.begin(), loop.end()));
    }
    CHECK(total == 6);
  }
}

TEST_CASE("permutation text") {
  CHECK(parse_permutation("(1, 10, 9, 4, 3, 2, 5, 8, 7, 6)") == std::vector<int>{1, 10, 9, 4, 3, 2, 5, 8, 7, 6});
  CHECK(format_permutation(std::vector<int>{3, 2, 1}) == "(3,2,1)");
  CHECK_THROWS_AS(parse_permutation("(1,2"), MalformedInput);
}
