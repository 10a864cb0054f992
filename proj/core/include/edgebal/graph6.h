#pragma once

#include <string>
#include <string_view>

#include "edgebal/graph.h"

namespace edgebal {

// graph6 codec. The size header is N(n) = n+63 for n <= 62, then the
// 126-prefixed 18-bit and 36-bit forms. The body packs the column-major
// upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, each
// offset by 63, zero-padded on the right.
//
// A trailing newline and the optional ">>graph6<<" prefix are accepted.
// Throws MalformedHeader, TruncatedBits, TrailingGarbage, InvalidCharacter.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

}  // namespace edgebal
