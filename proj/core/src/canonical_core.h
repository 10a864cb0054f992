#pragma once

// Bitmask kernel shared by canonical.cc and atlas.cc.

#include <array>
#include <cstdint>

#include "edgebal/canonical.h"
#include "edgebal/graph.h"

namespace edgebal::detail {

using AdjMasks = std::array<std::uint32_t, kMaxExactIsoVertices>;

struct CanonResult {
  // Upper-triangle bits in graph6 order, first pair in the most significant
  // used bit.
  std::uint64_t key = 0;
  // order[k] = original vertex placed at canonical position k.
  std::array<std::int8_t, kMaxExactIsoVertices> order{};
};

CanonResult canonicalize(const AdjMasks& adj, int n);

AdjMasks masks_of(const Graph& g);
Graph graph_from_key(std::uint64_t key, int n);

inline int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace edgebal::detail
