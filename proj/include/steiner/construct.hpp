#ifndef STEINER_CONSTRUCT_HPP
#define STEINER_CONSTRUCT_HPP

#include <functional>
#include <optional>

#include "steiner/cost_view.hpp"
#include "steiner/graph_ref.hpp"
#include "steiner/tree.hpp"

namespace steiner {

// Allows arc a (tail -> head) to be traversed. Used by branch-and-bound to
// restrict growth to arcs saturated by dual ascent.
using ArcFilter = std::function<bool(ArcId)>;

// Shortest-path heuristic: grow a tree from root, repeatedly attaching the
// closest uncovered terminal via its whole shortest path under view costs.
// One shared frontier is kept across attachments (tree vertices re-enter at
// distance zero) instead of restarting Dijkstra. The result is re-costed and
// re-optimized (leaf pruning + MST over its vertex set) on original costs.
// Infeasible (nullopt) when some terminal is unreachable through allowed arcs.
// terminals_override replaces the graph's terminal set for this call (the
// key-vertex insertion search grows toward T plus one forced vertex).
std::optional<SteinerTree> sph(GraphRef g, const CostView& view, Vertex root,
                               const ArcFilter& arc_filter = nullptr,
                               const std::vector<Vertex>* terminals_override = nullptr);

}  // namespace steiner

#endif
