#ifndef STEINER_TYPES_HPP
#define STEINER_TYPES_HPP

#include <cstdint>
#include <limits>

namespace steiner {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using ArcId = std::int32_t;  // arc 2e = u->v, arc 2e+1 = v->u
using Cost = std::int64_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

// Adding two path lengths without wrapping; kInfCost absorbs.
inline Cost saturating_add(Cost a, Cost b) {
  if (a == kInfCost || b == kInfCost) return kInfCost;
  if (a > kInfCost - b) return kInfCost;
  return a + b;
}

}  // namespace steiner

#endif
