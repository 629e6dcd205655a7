#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "meander/diagram.hpp"
#include "meander/meander.hpp"

namespace meander {

enum class RenderStyle { shadow, alternating, checkerboard };

RenderStyle parse_render_style(std::string_view s);  // throws MalformedInput
const char* render_style_name(RenderStyle s);

// Axis position i sits at x = 2i, so an arc joining positions a and b has
// integer radius |a - b|. Arcs carry data-side/data-from/data-to/data-radius.
std::string render_open_meander(const OpenMeander& m);
// The same diagram with a meander layout when its code reads as a closure:
// the axis 1..n first, then the curve along a meander permutation.
std::optional<Diagram> with_meander_layout(const Diagram& d);

// Needs a meander layout (closures, meandric systems, or a code accepted by
// with_meander_layout); throws DomainError otherwise. Checkerboard fills
// every face, the outer one as the background rectangle.
std::string render_diagram(const Diagram& d, RenderStyle style);

}  // namespace meander
