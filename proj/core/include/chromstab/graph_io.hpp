#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chromstab/graph.hpp"

namespace chromstab {

/// Decodes a short-form graph6 string (1 <= n <= 62). Throws ParseError on
/// a bad length, a byte outside 63..126, nonzero padding or trailing bytes.
Graph parse_graph6(std::string_view text);

/// Encodes under the identity labeling; no canonical relabeling is done.
std::string to_graph6(const Graph& g);

/// Reads the "n m" header followed by m "u v" lines. Text after '#' on any
/// line is ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

}  // namespace chromstab
