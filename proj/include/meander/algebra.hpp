#pragma once

#include <utility>
#include <vector>

#include "meander/codes.hpp"
#include "meander/diagram.hpp"

namespace meander {

struct ChordDiagram {
  int n = 0;
  std::vector<int> circle;                  // unsigned labels around the circle
  std::vector<std::pair<int, int>> chords;  // per label: (over position, under position), 0-based
};

ChordDiagram chord_diagram(const GaussCode& g);
// Back to a Gauss code read around the circle.
GaussCode gauss_from_chords(const ChordDiagram& c);

// Axis signs of a meander closure, read from the axis component.
std::vector<int> axis_signs_of(const Diagram& d);

// Joins the curve of b after the curve of a. When a has odd order b is turned
// over (rotated about the axis) so that its first arc continues on the right side.
Diagram meander_sum(const Diagram& a, const Diagram& b);

// First half visits every crossing once (labels in any order).
bool is_half_ordered(const GaussCode& g);
// The chord diagram read backwards, starting at the reversed first half.
GaussCode reflect_code(const GaussCode& g);

// Second half of g1 followed by the negated second half of g2 (chords matched
// by label). Same odd n required.
GaussCode ogc_product_code(const GaussCode& g1, const GaussCode& g2);
Diagram ogc_product_knots(const GaussCode& g1, const GaussCode& g2);
// {{G1'}, {-G2'}}. Operands are even-n ordered knot codes or two-component
// codes whose second component visits every crossing once.
GaussCode ogc_link_product_code(const GaussCode& g1, const GaussCode& g2);
// Relabels so the first component reads 1, 2, ..., n (it must visit each crossing once).
GaussCode ordered_link_form(const GaussCode& g);
Diagram ogc_product_links(const GaussCode& g1, const GaussCode& g2);

// Ordered code of a meander knot closure: the curve part first.
GaussCode ordered_code_of(const Diagram& d);

// The ordered shadow closes as a meander: with the first half on the axis, the
// second half is a meander permutation.
bool ordered_shadow_is_meander(const GaussCode& g);

}  // namespace meander
