#include "steiner/mst.hpp"

#include <algorithm>

#include "steiner/dsu.hpp"

namespace steiner {

std::optional<SteinerTree> mst_on_induced(GraphRef g,
                                          std::span<const std::uint8_t> vertex_mask) {
  return mst_on_induced_terminals(g, vertex_mask, g.terminals());
}

std::optional<SteinerTree> mst_on_induced_terminals(GraphRef g,
                                                    std::span<const std::uint8_t> vertex_mask,
                                                    const std::vector<Vertex>& terminals) {
  const Instance& inst = g.instance();
  for (Vertex t : terminals)
    if (!vertex_mask[t]) return std::nullopt;

  DisjointSets dsu(inst.vertex_count());
  std::vector<EdgeId> forest;
  for (EdgeId e : inst.edges_by_cost()) {
    if (!g.edge_ok(e)) continue;
    const Edge& ed = inst.edge(e);
    if (!vertex_mask[ed.u] || !vertex_mask[ed.v]) continue;
    if (dsu.unite(ed.u, ed.v)) forest.push_back(e);
  }

  Vertex anchor = dsu.find(terminals.front());
  for (Vertex t : terminals)
    if (dsu.find(t) != anchor) return std::nullopt;

  SteinerTree tree;
  for (EdgeId e : forest)
    if (dsu.find(inst.edge(e).u) == anchor) tree.edges.push_back(e);
  prune_leaves_keeping(g, tree, terminals);
  tree.normalize(inst);
  return tree;
}

namespace {

// Kruskal over boundary edges between labeled regions. Labels must be dense
// in [0, k). Returns the chosen boundary edges, or nullopt if the regions
// cannot all be connected.
std::optional<std::vector<EdgeId>> boundary_kruskal(GraphRef g,
                                                    std::span<const Cost> dist,
                                                    std::span<const Vertex> region,
                                                    int k) {
  const Instance& inst = g.instance();
  struct Boundary {
    Cost weight;
    EdgeId e;
  };
  std::vector<Boundary> boundaries;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (!g.edge_ok(e)) continue;
    const Edge& ed = inst.edge(e);
    Vertex ru = region[ed.u], rv = region[ed.v];
    if (ru == kNoVertex || rv == kNoVertex || ru == rv) continue;
    Cost w = saturating_add(saturating_add(dist[ed.u], ed.cost), dist[ed.v]);
    boundaries.push_back({w, e});
  }
  std::sort(boundaries.begin(), boundaries.end(), [](const Boundary& a, const Boundary& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.e < b.e;
  });

  DisjointSets dsu(k);
  std::vector<EdgeId> chosen;
  for (const Boundary& b : boundaries) {
    const Edge& ed = inst.edge(b.e);
    if (dsu.unite(region[ed.u], region[ed.v])) {
      chosen.push_back(b.e);
      if (static_cast<int>(chosen.size()) == k - 1) break;
    }
  }
  if (static_cast<int>(chosen.size()) != k - 1) return std::nullopt;
  return chosen;
}

}  // namespace

std::optional<std::vector<EdgeId>> distance_network_mst(GraphRef g, const VoronoiDiagram& vor) {
  std::vector<Vertex> terms = g.terminals();
  const int k = static_cast<int>(terms.size());
  if (k <= 1) return std::vector<EdgeId>{};

  // Map vb to a dense terminal index.
  std::vector<Vertex> region(g.instance().vertex_count(), kNoVertex);
  std::vector<Vertex> term_index(g.instance().vertex_count(), kNoVertex);
  for (int i = 0; i < k; ++i) term_index[terms[i]] = i;
  for (Vertex v = 0; v < g.instance().vertex_count(); ++v)
    if (vor.root[v] != kNoVertex) region[v] = term_index[vor.root[v]];

  return boundary_kruskal(g, vor.dist, region, k);
}

std::vector<EdgeId> realize_boundary_path(const Instance& inst, const ShortestPathForest& f,
                                          EdgeId boundary) {
  std::vector<EdgeId> out = f.path_to(inst, inst.edge(boundary).u);
  out.push_back(boundary);
  std::vector<EdgeId> right = f.path_to(inst, inst.edge(boundary).v);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::optional<RegionConnection> connect_regions(GraphRef g, std::span<const Cost> edge_costs,
                                                std::span<const Vertex> labels, int k) {
  const Instance& inst = g.instance();
  if (k <= 1) return RegionConnection{};

  std::vector<Vertex> sources;
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (labels[v] != kNoVertex && g.vertex_ok(v)) sources.push_back(v);
  ShortestPathForest f = multi_source_dijkstra(g, edge_costs, sources);

  std::vector<Vertex> region(inst.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (f.root[v] != kNoVertex) region[v] = labels[f.root[v]];

  auto chosen = boundary_kruskal(g, f.dist, region, k);
  if (!chosen) return std::nullopt;

  RegionConnection conn;
  conn.boundary = *chosen;
  std::vector<std::uint8_t> seen(inst.edge_count(), 0);
  for (EdgeId b : conn.boundary)
    for (EdgeId e : realize_boundary_path(inst, f, b))
      if (!seen[e]) {
        seen[e] = 1;
        conn.realized.push_back(e);
      }
  return conn;
}

}  // namespace steiner
