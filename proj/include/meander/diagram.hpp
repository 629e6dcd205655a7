#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "meander/codes.hpp"
#include "meander/meander.hpp"

namespace meander {

// Edge ids around a crossing, counterclockwise, starting with the incoming
// under edge. Edge k is the segment leaving the k-th visit (global order).
struct PdCrossing {
  std::array<int, 4> edges;
};

struct EdgeEnd {
  int crossing;  // 0-based crossing index (label - 1)
  int slot;      // position in PdCrossing::edges
};

// Where a diagram came from when it is drawn over an axis.
struct MeanderLayout {
  std::vector<int> permutation;         // open meander, as drawn (first arc upper)
  std::vector<std::vector<int>> loops;  // meandric system loops (axis is component 0)
  bool reversed = false;                // curve traversed from its far end
};

class Diagram {
 public:
  Diagram() = default;
  // signs[label - 1] is the crossing sign. Throws RealizabilityError when the
  // code with these signs has no planar embedding.
  Diagram(GaussCode g, std::vector<int> signs);

  const GaussCode& gauss() const { return gauss_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign(int label) const { return signs_[label - 1]; }
  int crossing_count() const { return static_cast<int>(signs_.size()); }
  int component_count() const { return static_cast<int>(gauss_.components.size()); }
  int free_loops() const;
  int edge_count() const { return static_cast<int>(edge_comp_.size()); }
  const std::vector<PdCrossing>& pd() const { return pd_; }
  EdgeEnd head(int e) const { return head_[e]; }
  EdgeEnd tail(int e) const { return tail_[e]; }
  int edge_component(int e) const { return edge_comp_[e]; }
  int writhe() const;
  // Number of boundary cycles of the rotation system.
  int face_cycles() const { return face_cycles_; }
  int pieces() const { return pieces_; }

  const std::optional<MeanderLayout>& layout() const { return layout_; }
  void set_layout(MeanderLayout l) { layout_ = std::move(l); }

 private:
  GaussCode gauss_;
  std::vector<int> signs_;
  std::vector<PdCrossing> pd_;
  std::vector<EdgeEnd> head_, tail_;
  std::vector<int> edge_comp_;
  int face_cycles_ = 0, pieces_ = 0;
  std::optional<MeanderLayout> layout_;
};

struct DiagramFlags {
  bool reduced = false;
  bool prime = false;
  bool split = false;
  bool alternating = false;
  bool positive = false;
  bool components_simple = false;
  bool operator==(const DiagramFlags&) const = default;
};

struct Face {
  std::vector<EdgeEnd> corners;  // corner `slot` lies between slots slot and slot+1
  std::vector<int> darts;        // edge+1 traversed forward, -(edge+1) backward
  int color = 0;
};

// Axis sign convention: axis_signs[i-1] > 0 when the axis passes over at position i.
Diagram close_meander(std::span<const int> permutation, std::span<const int> axis_signs);
Diagram close_open_meander(const OpenMeander& m);
Diagram close_meandric_system(const MeandricSystem& s);
std::vector<int> alternating_axis_signs(int n);
// Crossing sign where the curve meets an axis running left to right.
inline int axis_crossing_sign(bool axis_over, bool curve_up) {
  return axis_over == curve_up ? 1 : -1;
}

Diagram realize_gauss_code(const GaussCode& g);
Diagram mirror(const Diagram& d);
DiagramFlags analyze(const Diagram& d);
std::vector<Face> checkerboard_faces(const Diagram& d);
// Crossing indices (0-based) that some separating circle meets only there.
std::vector<int> nugatory_crossings(const Diagram& d);
// Removes nugatory crossings by untwisting until none remain.
Diagram remove_nugatory(const Diagram& d);
// Sub-diagram on the given components (crossings among them keep their signs).
Diagram sublink(const Diagram& d, std::span<const int> components);

DTCode to_dt_code(const Diagram& d);
Diagram from_dt_code(const DTCode& c);
std::optional<GaussCode> find_ordered_form(const GaussCode& g);
// First half of an ordered single-component code visits 1..n in order.
bool is_ordered(const GaussCode& g);

}  // namespace meander
