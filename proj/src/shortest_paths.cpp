#include "steiner/shortest_paths.hpp"

#include <queue>

namespace steiner {

std::vector<EdgeId> ShortestPathForest::path_to(const Instance& inst, Vertex v) const {
  std::vector<EdgeId> path;
  while (parent_edge[v] != kNoEdge) {
    EdgeId e = parent_edge[v];
    path.push_back(e);
    v = inst.other_end(e, v);
  }
  return path;
}

ShortestPathForest multi_source_dijkstra(GraphRef g, std::span<const Cost> edge_costs,
                                         std::span<const Vertex> sources) {
  const Instance& inst = g.instance();
  const int n = inst.vertex_count();
  ShortestPathForest f;
  f.dist.assign(n, kInfCost);
  f.parent_edge.assign(n, kNoEdge);
  f.root.assign(n, kNoVertex);

  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  for (Vertex s : sources) {
    if (!g.vertex_ok(s)) continue;
    if (f.dist[s] == 0) continue;
    f.dist[s] = 0;
    f.root[s] = s;
    pq.push({0, s});
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != f.dist[v]) continue;
    for (EdgeId e : inst.incident(v)) {
      if (!g.edge_ok(e)) continue;
      Vertex w = inst.other_end(e, v);
      Cost nd = saturating_add(d, edge_costs[e]);
      if (nd < f.dist[w] || (nd == f.dist[w] && f.root[v] < f.root[w])) {
        f.dist[w] = nd;
        f.parent_edge[w] = e;
        f.root[w] = f.root[v];
        pq.push({nd, w});
      }
    }
  }
  return f;
}

VoronoiDiagram build_voronoi(GraphRef g, std::span<const Cost> edge_costs) {
  std::vector<Vertex> terms = g.terminals();
  VoronoiDiagram vor;
  static_cast<ShortestPathForest&>(vor) = multi_source_dijkstra(g, edge_costs, terms);
  return vor;
}

VoronoiDiagram build_voronoi(GraphRef g) {
  std::vector<Cost> costs(g.instance().edge_count());
  for (EdgeId e = 0; e < g.instance().edge_count(); ++e) costs[e] = g.instance().edge(e).cost;
  return build_voronoi(g, costs);
}

}  // namespace steiner
