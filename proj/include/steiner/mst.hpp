#ifndef STEINER_MST_HPP
#define STEINER_MST_HPP

#include <optional>
#include <span>
#include <vector>

#include "steiner/shortest_paths.hpp"
#include "steiner/tree.hpp"
#include "steiner/types.hpp"

namespace steiner {

// MST of the subgraph induced by vertex_mask, restricted to the component
// holding the terminals, with non-terminal leaves pruned. Infeasible (nullopt)
// when the terminals are not connected within the induced subgraph.
std::optional<SteinerTree> mst_on_induced(GraphRef g, std::span<const std::uint8_t> vertex_mask);

// Same, but spanning an explicit terminal set instead of the graph's.
std::optional<SteinerTree> mst_on_induced_terminals(GraphRef g,
                                                    std::span<const std::uint8_t> vertex_mask,
                                                    const std::vector<Vertex>& terminals);

// MST of the terminal distance network, computed by a Kruskal sweep over
// Voronoi boundary edges. Returns the |T|-1 chosen boundary edges.
std::optional<std::vector<EdgeId>> distance_network_mst(GraphRef g, const VoronoiDiagram& vor);

// Original-graph edges realizing one boundary edge of the distance network:
// the vp-chains of both endpoints plus the boundary edge itself.
std::vector<EdgeId> realize_boundary_path(const Instance& inst, const ShortestPathForest& f,
                                          EdgeId boundary);

// Cheapest reconnection of k vertex groups (labels[v] in [0,k), or -1 for
// free vertices usable as intermediates): labeled multi-source Dijkstra, then
// a Kruskal sweep over boundary edges. realized = union of path edges.
struct RegionConnection {
  std::vector<EdgeId> boundary;
  std::vector<EdgeId> realized;
};
std::optional<RegionConnection> connect_regions(GraphRef g, std::span<const Cost> edge_costs,
                                                std::span<const Vertex> labels, int k);

}  // namespace steiner

#endif
