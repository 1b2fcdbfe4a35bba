#include "steiner/localsearch.hpp"

#include <algorithm>
#include <queue>

#include "steiner/dsu.hpp"
#include "steiner/mst.hpp"
#include "steiner/shortest_paths.hpp"

namespace steiner {

KeyDecomposition decompose(GraphRef g, const SteinerTree& tree) {
  const Instance& inst = g.instance();
  KeyDecomposition kd;
  kd.paths_at.resize(inst.vertex_count());

  std::vector<int> degree(inst.vertex_count(), 0);
  std::vector<std::vector<EdgeId>> inc(inst.vertex_count());
  for (EdgeId e : tree.edges) {
    const Edge& ed = inst.edge(e);
    ++degree[ed.u];
    ++degree[ed.v];
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }

  auto is_endpoint = [&](Vertex v) { return g.is_terminal(v) || degree[v] >= 3; };

  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (degree[v] >= 3 && !g.is_terminal(v)) kd.key_vertices.push_back(v);

  std::vector<std::uint8_t> used(inst.edge_count(), 0);
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (degree[v] == 0 || !is_endpoint(v)) continue;
    for (EdgeId first : inc[v]) {
      if (used[first]) continue;
      KeyPath path;
      path.a = v;
      Vertex prev = v;
      EdgeId e = first;
      while (true) {
        used[e] = 1;
        path.edges.push_back(e);
        Vertex next = inst.other_end(e, prev);
        if (is_endpoint(next)) {
          path.b = next;
          break;
        }
        path.internal.push_back(next);
        // degree-2 Steiner vertex: continue along the other tree edge
        e = (inc[next][0] == e) ? inc[next][1] : inc[next][0];
        prev = next;
      }
      path.cost = tree_cost(inst, path.edges);
      int idx = static_cast<int>(kd.key_paths.size());
      kd.key_paths.push_back(std::move(path));
      kd.paths_at[kd.key_paths[idx].a].push_back(idx);
      kd.paths_at[kd.key_paths[idx].b].push_back(idx);
    }
  }
  return kd;
}

namespace {

std::vector<Cost> original_costs(const Instance& inst) {
  std::vector<Cost> c(inst.edge_count());
  for (EdgeId e = 0; e < inst.edge_count(); ++e) c[e] = inst.edge(e).cost;
  return c;
}

// Kruskal over the current tree's edges plus the candidate vertex's edges
// into the tree; cheap incremental evaluation of a single insertion.
SteinerTree insert_vertex_mst(GraphRef g, const std::vector<EdgeId>& tree_by_cost,
                              const std::vector<EdgeId>& cand_edges, DisjointSets& dsu) {
  const Instance& inst = g.instance();
  SteinerTree out;
  size_t i = 0, j = 0;
  auto cheaper = [&](EdgeId x, EdgeId y) {
    if (inst.edge(x).cost != inst.edge(y).cost) return inst.edge(x).cost < inst.edge(y).cost;
    return x < y;
  };
  while (i < tree_by_cost.size() || j < cand_edges.size()) {
    EdgeId e;
    if (j == cand_edges.size() ||
        (i < tree_by_cost.size() && cheaper(tree_by_cost[i], cand_edges[j])))
      e = tree_by_cost[i++];
    else
      e = cand_edges[j++];
    if (dsu.unite(inst.edge(e).u, inst.edge(e).v)) out.edges.push_back(e);
  }
  return out;
}

}  // namespace

PassResult pass_v(GraphRef g, const SteinerTree& tree) {
  const Instance& inst = g.instance();
  PassResult res{tree, false, 0};
  if (tree.edges.empty()) return res;

  std::vector<std::uint8_t> mask = res.tree.vertex_mask(inst);
  std::vector<EdgeId> tree_by_cost;
  auto refresh = [&]() {
    mask = res.tree.vertex_mask(inst);
    tree_by_cost = res.tree.edges;
    std::sort(tree_by_cost.begin(), tree_by_cost.end(), [&](EdgeId a, EdgeId b) {
      if (inst.edge(a).cost != inst.edge(b).cost) return inst.edge(a).cost < inst.edge(b).cost;
      return a < b;
    });
  };
  refresh();

  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (mask[v] || !g.vertex_ok(v)) continue;
    std::vector<EdgeId> cand;
    for (EdgeId e : inst.incident(v)) {
      if (!g.edge_ok(e)) continue;
      if (mask[inst.other_end(e, v)]) cand.push_back(e);
    }
    if (cand.size() < 2) continue;  // v would be a leaf
    std::sort(cand.begin(), cand.end(), [&](EdgeId a, EdgeId b) {
      if (inst.edge(a).cost != inst.edge(b).cost) return inst.edge(a).cost < inst.edge(b).cost;
      return a < b;
    });
    DisjointSets dsu(inst.vertex_count());
    SteinerTree candidate = insert_vertex_mst(g, tree_by_cost, cand, dsu);
    prune_non_terminal_leaves(g, candidate);
    candidate.normalize(inst);
    if (candidate.cost < res.tree.cost) {
      res.tree = std::move(candidate);
      ++res.moves_applied;
      refresh();
    }
  }
  res.improved = res.moves_applied > 0;
  return res;
}

PassResult pass_u(GraphRef g, const SteinerTree& tree) {
  const Instance& inst = g.instance();
  PassResult res{tree, false, 0};
  if (tree.edges.empty()) return res;

  std::vector<std::uint8_t> mask = res.tree.vertex_mask(inst);
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (!mask[v] || g.is_terminal(v)) continue;
    mask[v] = 0;
    auto candidate = mst_on_induced(g, mask);
    if (candidate && candidate->cost < res.tree.cost) {
      res.tree = std::move(*candidate);
      ++res.moves_applied;
      mask = res.tree.vertex_mask(inst);
    } else {
      mask[v] = 1;
    }
  }
  res.improved = res.moves_applied > 0;
  return res;
}

namespace {

struct TreeAdj {
  std::vector<int> degree;
  std::vector<std::vector<EdgeId>> inc;

  TreeAdj(const Instance& inst, const SteinerTree& tree)
      : degree(inst.vertex_count(), 0), inc(inst.vertex_count()) {
    for (EdgeId e : tree.edges) {
      const Edge& ed = inst.edge(e);
      ++degree[ed.u];
      ++degree[ed.v];
      inc[ed.u].push_back(e);
      inc[ed.v].push_back(e);
    }
  }
};

// Component of `start` in the tree, excluding `banned` edges.
std::vector<Vertex> tree_component(const Instance& inst, const TreeAdj& adj,
                                   const std::vector<std::uint8_t>& banned_edge, Vertex start) {
  std::vector<Vertex> comp{start};
  std::vector<std::uint8_t> seen(inst.vertex_count(), 0);
  seen[start] = 1;
  for (size_t h = 0; h < comp.size(); ++h) {
    Vertex v = comp[h];
    for (EdgeId e : adj.inc[v]) {
      if (banned_edge[e]) continue;
      Vertex w = inst.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
    }
  }
  return comp;
}

}  // namespace

PassResult pass_q(GraphRef g, const SteinerTree& tree) {
  const Instance& inst = g.instance();
  PassResult res{tree, false, 0};
  if (tree.edges.empty()) return res;

  const KeyDecomposition kd = decompose(g, res.tree);
  std::vector<Cost> costs = original_costs(inst);
  std::vector<std::uint8_t> dirty(inst.vertex_count(), 0);

  auto path_dirty = [&](const KeyPath& p) {
    if (dirty[p.a] || dirty[p.b]) return true;
    for (Vertex v : p.internal)
      if (dirty[v]) return true;
    return false;
  };
  auto mark_vertices = [&](const std::vector<EdgeId>& edges) {
    for (EdgeId e : edges) {
      dirty[inst.edge(e).u] = 1;
      dirty[inst.edge(e).v] = 1;
    }
  };

  std::vector<std::uint8_t> in_tree(inst.edge_count(), 0);
  for (EdgeId e : res.tree.edges) in_tree[e] = 1;

  // (a) key-path exchange
  for (const KeyPath& path : kd.key_paths) {
    if (path.a == path.b) continue;  // degenerate, handled by elimination
    if (path_dirty(path)) continue;

    TreeAdj adj(inst, res.tree);
    std::vector<std::uint8_t> banned(inst.edge_count(), 0);
    for (EdgeId e : path.edges) banned[e] = 1;
    std::vector<Vertex> side_a = tree_component(inst, adj, banned, path.a);
    std::vector<Vertex> side_b = tree_component(inst, adj, banned, path.b);

    ShortestPathForest f = multi_source_dijkstra(g, costs, side_a);
    Vertex best = kNoVertex;
    for (Vertex v : side_b)
      if (f.dist[v] != kInfCost && (best == kNoVertex || f.dist[v] < f.dist[best] ||
                                    (f.dist[v] == f.dist[best] && v < best)))
        best = v;
    if (best == kNoVertex) continue;
    if (f.dist[best] >= path.cost) continue;

    // Walk source -> best and cut at the first vertex on the b side; with
    // zero-cost ties the shortest path may otherwise re-enter that side.
    std::vector<std::uint8_t> on_b(inst.vertex_count(), 0);
    for (Vertex v : side_b) on_b[v] = 1;
    std::vector<EdgeId> to_source = f.path_to(inst, best);  // best -> source order
    Vertex cur = best;
    for (EdgeId e : to_source) cur = inst.other_end(e, cur);  // cur = the source
    std::vector<EdgeId> replacement;
    for (auto it = to_source.rbegin(); it != to_source.rend(); ++it) {
      cur = inst.other_end(*it, cur);
      replacement.push_back(*it);
      if (on_b[cur]) break;
    }
    for (EdgeId e : path.edges) in_tree[e] = 0;
    for (EdgeId e : replacement) in_tree[e] = 1;
    std::vector<EdgeId> rebuilt;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
      if (in_tree[e]) rebuilt.push_back(e);
    res.tree.edges = std::move(rebuilt);
    res.tree.cost = tree_cost(inst, res.tree.edges);
    ++res.moves_applied;

    mark_vertices(path.edges);
    for (Vertex v : path.internal) dirty[v] = 1;
    mark_vertices(replacement);
  }

  // (b) key-vertex elimination
  for (Vertex v : kd.key_vertices) {
    if (dirty[v]) continue;
    bool skip = false;
    std::vector<const KeyPath*> paths;
    for (int idx : kd.paths_at[v]) {
      const KeyPath& p = kd.key_paths[idx];
      if (path_dirty(p)) {
        skip = true;
        break;
      }
      paths.push_back(&p);
    }
    if (skip || paths.size() < 3) continue;

    TreeAdj adj(inst, res.tree);
    std::vector<std::uint8_t> banned(inst.edge_count(), 0);
    Cost removed_cost = 0;
    for (const KeyPath* p : paths) {
      for (EdgeId e : p->edges) banned[e] = 1;
      removed_cost += p->cost;
    }

    std::vector<Vertex> labels(inst.vertex_count(), kNoVertex);
    int k = 0;
    for (const KeyPath* p : paths) {
      Vertex far = (p->a == v) ? p->b : p->a;
      for (Vertex w : tree_component(inst, adj, banned, far)) labels[w] = k;
      ++k;
    }
    labels[v] = kNoVertex;  // the key vertex itself is free again

    auto conn = connect_regions(g, costs, labels, k);
    if (!conn) continue;
    Cost new_cost = tree_cost(inst, conn->realized);
    if (new_cost >= removed_cost) continue;

    for (const KeyPath* p : paths)
      for (EdgeId e : p->edges) in_tree[e] = 0;
    for (EdgeId e : conn->realized) in_tree[e] = 1;
    std::vector<EdgeId> rebuilt;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
      if (in_tree[e]) rebuilt.push_back(e);
    res.tree.edges = std::move(rebuilt);
    res.tree.cost = tree_cost(inst, res.tree.edges);
    ++res.moves_applied;

    dirty[v] = 1;
    for (const KeyPath* p : paths) {
      mark_vertices(p->edges);
      for (Vertex w : p->internal) dirty[w] = 1;
    }
    mark_vertices(conn->realized);
  }

  res.improved = res.tree.cost < tree.cost;
  return res;
}

PassResult key_vertex_insertion_pass(GraphRef g, const SteinerTree& tree, Rng& rng) {
  const Instance& inst = g.instance();
  PassResult res{tree, false, 0};
  std::vector<Vertex> terms = g.terminals();
  if (terms.size() <= 1) return res;

  std::vector<std::uint8_t> excluded(inst.vertex_count(), 0);
  for (Vertex t : terms) excluded[t] = 1;
  {
    KeyDecomposition kd = decompose(g, res.tree);
    for (Vertex v : kd.key_vertices) excluded[v] = 1;
  }
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (!excluded[v] && g.vertex_ok(v)) candidates.push_back(v);
  // random evaluation order
  for (size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng.next_int(0, static_cast<std::int64_t>(i) - 1)]);

  CostView view = CostView::original(inst);
  for (Vertex v : candidates) {
    std::vector<Vertex> forced = terms;
    forced.push_back(v);
    auto grown = sph(g, view, v, nullptr, &forced);
    if (!grown) continue;
    prune_non_terminal_leaves(g, *grown);
    grown->normalize(inst);
    if (grown->cost < res.tree.cost) {
      res.tree = std::move(*grown);
      ++res.moves_applied;
      terms = g.terminals();
    }
  }
  res.improved = res.moves_applied > 0;
  return res;
}

SteinerTree vq(GraphRef g, SteinerTree tree, const VqOptions& opts) {
  const Instance& inst = g.instance();
  if (tree.edges.empty()) return tree;

  int passes = 0;
  bool next_is_v = true;

  if (opts.schedule != nullptr) {
    CostView view = apply(*opts.schedule, inst);
    for (int i = 0; i < 3 && passes < opts.max_passes; ++i) {
      // bake the working costs into a throwaway instance (edge ids preserved)
      std::vector<Edge> edges = inst.edges();
      for (EdgeId e = 0; e < inst.edge_count(); ++e) edges[e].cost = view[e];
      Instance perturbed(inst.vertex_count(), std::move(edges), inst.terminals());
      GraphRef pg(perturbed);
      SteinerTree working = tree;
      working.cost = tree_cost(perturbed, working.edges);
      PassResult r = next_is_v ? pass_v(pg, working) : pass_q(pg, working);
      tree.edges = r.tree.edges;
      ++passes;
      next_is_v = !next_is_v;
      if (i < 2) view = decay(view, inst, opts.decay_alpha);
    }
    tree.cost = tree_cost(inst, tree.edges);
  }

  int consecutive_failures = 0;
  while (passes < opts.max_passes) {
    PassResult r = next_is_v ? pass_v(g, tree) : pass_q(g, tree);
    ++passes;
    next_is_v = !next_is_v;
    consecutive_failures = r.improved ? 0 : consecutive_failures + 1;
    tree = std::move(r.tree);
    if (consecutive_failures >= 2) {
      if (opts.use_key_vertex_insertion && opts.rng != nullptr && passes < opts.max_passes) {
        PassResult k = key_vertex_insertion_pass(g, tree, *opts.rng);
        ++passes;
        tree = std::move(k.tree);
        if (k.improved) {
          consecutive_failures = 0;
          continue;
        }
      }
      break;
    }
  }
  return tree;
}

}  // namespace steiner
