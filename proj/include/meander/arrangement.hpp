#pragma once

#include <functional>
#include <map>
#include <vector>

#include "meander/diagram.hpp"

namespace meander {

// Rotation system of a drawing whose components are simple closed curves.
// Darts leave their vertex; next is the counterclockwise successor.
struct PlanarMap {
  std::vector<int> twin, next, prev, vertex, curve;
  int vertices = 0;
  int curves = 0;

  int darts() const { return static_cast<int>(twin.size()); }
  // Dart after d along the boundary of the face containing the corner before d.
  int face_next(int d) const { return next[twin[d]]; }
};

PlanarMap map_of(const Diagram& d);
// Minimal dart code over all roots and both orientations; equal codes mean
// the same drawing on the sphere up to reflection.
std::vector<int> canonical_map_code(const PlanarMap& m);
// The alternating diagram on this shadow (one of the two mirror images).
Diagram alternating_diagram(const PlanarMap& m);

// Every way to add one more simple closed curve with k crossings, meeting each
// existing curve at least twice. Results repeat; callers dedupe.
void for_each_added_curve(const PlanarMap& m, int k, const std::function<void(const PlanarMap&)>& f);

// Distinct shadows of c simple closed curves with n crossings in total, every
// pair of curves crossing.
std::vector<PlanarMap> curve_arrangements(int n, int c);

}  // namespace meander

namespace meander {

// Shadows reachable by one flype. For reduced alternating diagrams flypes
// generate all minimal diagrams of the same link.
std::vector<PlanarMap> flype_neighbors(const PlanarMap& m);

// Assigns one id per flype class; ids count up from 0 in order of first sight.
class FlypeClasses {
 public:
  int classify(const PlanarMap& m);
  int classes() const { return next_; }

 private:
  std::map<std::vector<int>, int> ids_;
  int next_ = 0;
};

}  // namespace meander
