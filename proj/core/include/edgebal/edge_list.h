#pragma once

#include <iosfwd>
#include <string>

#include "edgebal/graph.h"

namespace edgebal {

// Plain text: a header line "n m" followed by m lines "u v".
// Throws ParseError on malformed text; graph errors propagate from
// from_edge_list (duplicates are rejected).
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

}  // namespace edgebal
