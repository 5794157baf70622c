#pragma once

#include <string>

#include "roq/grading/chart.hpp"

namespace roq {

enum class RenderFormat { svg, text };

// Throws UsageError for names other than "svg" and "text".
RenderFormat parse_render_format(const std::string& name);

// One grid cell per degree, x to the right and y up. Squares are copies of
// Z, circles copies of Z generated by twice the expected class, red dots
// copies of F_2. Bare charts draw every free summand as a square.
std::string render_svg(const Chart& c);

// One character per degree:
//   □ Z   ○ circled Z   · Z/2   ◇ other cyclic torsion
//   2..9 number of summands when there are several, # for more
// Empty degrees show the axes (| - +) or a space.
std::string render_text(const Chart& c);

std::string render(const Chart& c, RenderFormat f);

}  // namespace roq
