#ifndef STEINER_SHORTEST_PATHS_HPP
#define STEINER_SHORTEST_PATHS_HPP

#include <span>
#include <vector>

#include "steiner/graph_ref.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Shortest-path forest rooted at a set of sources. Unreachable vertices keep
// dist = kInfCost, parent_edge = kNoEdge and root = kNoVertex. Ties are
// resolved on (distance, vertex id), so the forest is deterministic.
struct ShortestPathForest {
  std::vector<Cost> dist;
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> root;  // nearest source

  // Edges of the source-to-v path in forest order (v side first).
  std::vector<EdgeId> path_to(const Instance& inst, Vertex v) const;
};

ShortestPathForest multi_source_dijkstra(GraphRef g, std::span<const Cost> edge_costs,
                                         std::span<const Vertex> sources);

// Voronoi diagram of the terminals: vb = root, vd = dist, vp = parent_edge.
struct VoronoiDiagram : ShortestPathForest {
  Vertex vb(Vertex v) const { return root[v]; }
  Cost vd(Vertex v) const { return dist[v]; }
  EdgeId vp(Vertex v) const { return parent_edge[v]; }
};

VoronoiDiagram build_voronoi(GraphRef g, std::span<const Cost> edge_costs);
VoronoiDiagram build_voronoi(GraphRef g);  // original costs

}  // namespace steiner

#endif
