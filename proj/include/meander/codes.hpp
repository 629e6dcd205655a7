#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace meander {

// Signed crossing labels per component; negative marks the undercrossing visit.
struct GaussCode {
  std::vector<std::vector<int>> components;

  int crossing_count() const;
  int visit_count() const;
  bool operator==(const GaussCode&) const = default;
  auto operator<=>(const GaussCode&) const = default;
};

// Each label 1..n exactly twice, once with each sign. Throws MalformedInput.
void validate_gauss_code(const GaussCode& g);

// Accepts "{-1, 2, ...}" for a knot or "{{...}, {...}}" for a link; "[...]"
// and the typographic minus sign are tolerated.
GaussCode parse_gauss_code(std::string_view s);
std::string format_gauss_code(const GaussCode& g);
// "{1, -2, 3}" without any Gauss-code validation.
std::vector<int> parse_int_sequence(std::string_view s);

struct DTCode {
  std::vector<int> component_sizes;  // crossings per component (half the visits)
  std::vector<int> evens;            // partner of odd label 2i-1; negative = switched

  bool operator==(const DTCode&) const = default;
  auto operator<=>(const DTCode&) const = default;
};

// Accepts "{{sizes}, {evens}}", "{sizes}, {evens}" or a bare "{evens}" knot code.
DTCode parse_dt_code(std::string_view s);
std::string format_dt_code(const DTCode& c);
void validate_dt_code(const DTCode& c);

// Nested integer lists; used by the parsers above.
struct IntTree {
  bool leaf = false;
  int value = 0;
  std::vector<IntTree> items;
};
IntTree parse_int_tree(std::string_view s);

}  // namespace meander
