#include "steiner/construct.hpp"

#include <queue>

#include "steiner/mst.hpp"

namespace steiner {

std::optional<SteinerTree> sph(GraphRef g, const CostView& view, Vertex root,
                               const ArcFilter& arc_filter,
                               const std::vector<Vertex>* terminals_override) {
  const Instance& inst = g.instance();
  const int n = inst.vertex_count();
  std::vector<Vertex> terms = terminals_override ? *terminals_override : g.terminals();
  if (!g.vertex_ok(root)) return std::nullopt;

  std::vector<std::uint8_t> want(n, 0);
  int wanted = 0;
  for (Vertex t : terms)
    if (!want[t]) {
      want[t] = 1;
      ++wanted;
    }

  std::vector<Cost> dist(n, kInfCost);
  std::vector<ArcId> parent(n, -1);
  std::vector<std::uint8_t> in_tree(n, 0);
  std::vector<EdgeId> tree_edges;

  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;

  int covered = 0;
  in_tree[root] = 1;
  if (want[root]) ++covered;
  dist[root] = 0;
  pq.push({0, root});

  // Pull in the whole shortest path; its vertices become frontier sources.
  auto attach = [&](Vertex t) {
    std::vector<Vertex> path;
    for (Vertex v = t; !in_tree[v]; v = inst.arc_tail(parent[v])) {
      path.push_back(v);
      in_tree[v] = 1;
      if (want[v]) ++covered;
      tree_edges.push_back(Instance::arc_edge(parent[v]));
    }
    for (Vertex p : path) {
      dist[p] = 0;
      pq.push({0, p});
    }
  };

  while (covered < wanted) {
    bool attached = false;
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      if (want[v] && !in_tree[v]) {
        attach(v);
        attached = true;
        break;
      }
      for (EdgeId e : inst.incident(v)) {
        if (!g.edge_ok(e)) continue;
        Vertex w = inst.other_end(e, v);
        if (arc_filter && !arc_filter(inst.arc_into(e, w))) continue;
        Cost nd = saturating_add(d, view[e]);
        if (nd < dist[w]) {
          dist[w] = nd;
          parent[w] = inst.arc_into(e, w);
          pq.push({nd, w});
        }
      }
    }
    if (!attached) return std::nullopt;  // some terminal unreachable
  }

  SteinerTree tree;
  tree.edges = std::move(tree_edges);
  tree.normalize(inst);
  if (tree.edges.empty()) return tree;

  // Never-worse cleanup on original costs: prune and swap in the MST of the
  // subgraph induced by the tree's vertex set.
  std::vector<std::uint8_t> mask = tree.vertex_mask(inst);
  for (Vertex t : terms) mask[t] = 1;
  auto mst = mst_on_induced_terminals(g, mask, terms);
  if (mst) return *mst;
  return tree;
}

}  // namespace steiner
