#pragma once

#include <string>

#include "roq/grading/chart.hpp"

namespace roq {

// roqchart 1
// theory <name>
// pipeline <name>
// window x0 x1 y0 y1
// maps <complete map names> | -
// entry x y rank torsion|- [label:annotation ...]
// map name x y [m11,m12;m21,m22]
// end
//
// Entries sorted by (x, y), maps by (name, x, y).
std::string serialize_chart(const Chart& c);
// ParseError with the line number on malformed input.
Chart parse_chart(const std::string& text);

Chart read_chart_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace roq
