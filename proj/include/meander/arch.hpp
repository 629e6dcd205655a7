#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meander {

// Noncrossing arcs over points 1..n on one side of the axis, plus at most two
// loose ends (points whose strand runs off to infinity).
class ArchConfiguration {
 public:
  ArchConfiguration() = default;
  // Throws MalformedInput on crossing arcs, reused points, more than two loose
  // ends or uncovered points.
  ArchConfiguration(int n_points, std::vector<std::pair<int, int>> arcs);

  int n_points() const { return n_; }
  // Arcs as (left, right), sorted by left foot.
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& loose_ends() const { return loose_; }
  // 0 for a loose end.
  int partner(int point) const { return partner_[point]; }
  // Number of arcs strictly enclosing the point.
  int depth(int point) const;
  // Levels of nesting; a lone arc counts 1.
  int max_depth() const;

  bool operator==(const ArchConfiguration& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> loose_;
  std::vector<int> partner_;  // 1-indexed
};

// Word over {'1', '(', ')'}; '1' marks a loose end.
struct DecoratedDyckWord {
  std::string text;

  bool operator==(const DecoratedDyckWord&) const = default;
  auto operator<=>(const DecoratedDyckWord& o) const { return compare(o) <=> 0; }
  // Lexicographic with '1' < '(' < ')'.
  int compare(const DecoratedDyckWord& o) const;
};

DecoratedDyckWord parse_dyck_word(std::string_view s);
ArchConfiguration dyck_decode(const DecoratedDyckWord& w);
DecoratedDyckWord dyck_encode(const ArchConfiguration& a);

// Words with n_arcs pairs and `loose` loose ends at nesting depth 0, in
// lexicographic order. Stops early when the callback returns false.
void for_each_arch_word(int n_arcs, int loose,
                        const std::function<bool(const DecoratedDyckWord&)>& f);
std::vector<DecoratedDyckWord> arch_words(int n_arcs, int loose);
std::vector<ArchConfiguration> enumerate_arch_configurations(int n_arcs, int loose);

}  // namespace meander
