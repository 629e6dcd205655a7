#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meander/arch.hpp"

namespace meander {

// A single open curve crossing the axis at positions 1..n. The curve leaves
// its first loose end from below, so the first arc is an upper arc.
struct OpenMeander {
  int order = 0;
  std::vector<int> permutation;  // axis positions in curve order
  ArchConfiguration upper, lower;

  bool operator==(const OpenMeander& o) const { return permutation == o.permutation; }
  // Max arc nesting per side.
  std::pair<int, int> height() const { return {upper.max_depth(), lower.max_depth()}; }
};

// Closed curves over an axis with n crossings; loops listed by smallest position.
struct MeandricSystem {
  int order = 0;
  ArchConfiguration upper, lower;
  std::vector<std::vector<int>> loops;  // each loop starts at its min position, first step upward
};

bool validate_meander_permutation(std::span<const int> p);
OpenMeander meander_from_permutation(std::vector<int> p);  // throws NotAMeander
OpenMeander meander_from_words(const DecoratedDyckWord& upper, const DecoratedDyckWord& lower);
std::pair<DecoratedDyckWord, DecoratedDyckWord> words_from_meander(const OpenMeander& m);

// Streams meanders in upper-word-major order; stops when f returns false.
void for_each_open_meander(int n, const std::function<bool(const OpenMeander&)>& f);
// All meanders of order n sorted by permutation.
std::vector<OpenMeander> enumerate_open_meanders(int n);
std::uint64_t count_open_meanders(int n);

std::vector<std::vector<int>> trace_loops(const ArchConfiguration& upper, const ArchConfiguration& lower);
void for_each_meandric_system(int n, int k, const std::function<bool(const MeandricSystem&)>& f);
std::vector<MeandricSystem> enumerate_meandric_systems(int n, int k);

std::vector<int> parse_permutation(std::string_view s);
std::string format_permutation(std::span<const int> p);

}  // namespace meander
