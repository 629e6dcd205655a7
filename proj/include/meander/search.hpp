#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meander/codes.hpp"
#include "meander/diagram.hpp"
#include "meander/invariants.hpp"

namespace meander {

struct SearchHit {
  int n = 0;
  Diagram diagram;
  DTCode dt;
};

// A knot or link type to look for. When alexander is set, hits must also
// match it (Jones alone leaves collisions such as 9_39 / K11n11).
struct SearchTarget {
  Fingerprint fingerprint;
  std::optional<LaurentPolynomial> alexander;
};
SearchTarget search_target(const Diagram& d);

struct SearchStats {
  std::uint64_t shadows = 0;
  std::uint64_t assignments = 0;
  std::uint64_t candidates = 0;  // modular matches before exact confirmation
};

// For each target the smallest order m <= max_n (odd for knots, even for
// two-component links) with a meander diagram of that type; every smaller m of
// the right parity has been exhausted. Ties go to the smallest DT code.
std::vector<std::optional<SearchHit>> search_meander_diagrams(const std::vector<SearchTarget>& targets, int max_n,
                                                              SearchStats* stats = nullptr);
std::optional<SearchHit> search_meander_diagram(const SearchTarget& target, int max_n);

// Ordered (semi-meander) shadows: the first half of the code runs along a
// segment, the second half is a simple arc from its end back to its start.
// The callback gets the second-half labels and, per visit, whether the arc
// crosses the segment from below to above.
void for_each_ordered_shadow(int n, const std::function<void(const std::vector<int>&, const std::vector<char>&)>& f);
std::uint64_t count_ordered_shadows(int n);
// Gauss code and diagram of an ordered shadow with segment_over[i] for label i+1.
Diagram ordered_shadow_diagram(const std::vector<int>& labels, const std::vector<char>& upward,
                               const std::vector<char>& segment_over);

std::vector<std::optional<SearchHit>> search_ogc_diagrams(const std::vector<SearchTarget>& targets, int max_n,
                                                          SearchStats* stats = nullptr);
std::optional<SearchHit> search_ogc_diagram(const SearchTarget& target, int max_n);

}  // namespace meander
