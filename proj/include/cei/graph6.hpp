#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cei/graph.hpp"

namespace cei {

// Standard graph6: order header (1, 4 or 8 bytes) then the upper triangle
// in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// each byte offset by 63.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix. Throws ParseError on a bad
// length, a byte outside 63..126, non-zero padding or trailing bytes.
Graph from_graph6(std::string_view text);

// One record per non-blank line of a newline-delimited graph6 stream.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
};
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace cei
