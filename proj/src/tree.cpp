#include "steiner/tree.hpp"

#include <algorithm>

#include "steiner/dsu.hpp"

namespace steiner {

void SteinerTree::normalize(const Instance& inst) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  cost = tree_cost(inst, edges);
}

std::vector<Vertex> SteinerTree::vertex_set(const Instance& inst) const {
  std::vector<std::uint8_t> mask = vertex_mask(inst);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

std::vector<std::uint8_t> SteinerTree::vertex_mask(const Instance& inst) const {
  std::vector<std::uint8_t> mask(inst.vertex_count(), 0);
  for (EdgeId e : edges) {
    mask[inst.edge(e).u] = 1;
    mask[inst.edge(e).v] = 1;
  }
  return mask;
}

Cost tree_cost(const Instance& inst, const std::vector<EdgeId>& edges) {
  Cost c = 0;
  for (EdgeId e : edges) c += inst.edge(e).cost;
  return c;
}

ValidationReport validate(GraphRef g, const SteinerTree& tree) {
  const Instance& inst = g.instance();
  ValidationReport rep;
  std::vector<Vertex> terms = g.terminals();

  if (tree.edges.empty()) {
    rep.cost = 0;
    if (terms.size() == 1) {
      rep.ok = (tree.cost == 0);
      if (!rep.ok) rep.violations.push_back("cached cost mismatch");
    } else {
      rep.violations.push_back("terminal uncovered");
    }
    return rep;
  }

  for (size_t i = 0; i < tree.edges.size(); ++i) {
    EdgeId e = tree.edges[i];
    if (e < 0 || e >= inst.edge_count()) {
      rep.violations.push_back("edge id out of range");
      return rep;
    }
    if (i > 0 && tree.edges[i] <= tree.edges[i - 1]) {
      rep.violations.push_back("edge set not sorted-unique");
      return rep;
    }
    if (!g.edge_ok(e)) rep.violations.push_back("edge not present in subgraph");
  }

  std::vector<int> degree(inst.vertex_count(), 0);
  DisjointSets dsu(inst.vertex_count());
  bool acyclic = true;
  for (EdgeId e : tree.edges) {
    const Edge& ed = inst.edge(e);
    ++degree[ed.u];
    ++degree[ed.v];
    if (!dsu.unite(ed.u, ed.v)) acyclic = false;
  }
  if (!acyclic) rep.violations.push_back("not acyclic");

  int vertices_touched = 0;
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (degree[v] > 0) ++vertices_touched;
  // acyclic + |E| = |V|-1 + full coverage below implies connected
  if (acyclic && vertices_touched != static_cast<int>(tree.edges.size()) + 1)
    rep.violations.push_back("not connected");

  Vertex anchor = terms.front();
  for (Vertex t : terms) {
    if (degree[t] == 0 || !dsu.same(anchor, t)) {
      rep.violations.push_back("terminal uncovered");
      break;
    }
  }

  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (degree[v] == 1 && !g.is_terminal(v)) {
      rep.violations.push_back("non-terminal leaf");
      break;
    }

  rep.cost = tree_cost(inst, tree.edges);
  if (rep.cost != tree.cost) rep.violations.push_back("cached cost mismatch");
  rep.ok = rep.violations.empty();
  return rep;
}

int edge_symmetric_difference(const SteinerTree& a, const SteinerTree& b) {
  size_t i = 0, j = 0;
  int diff = 0;
  while (i < a.edges.size() && j < b.edges.size()) {
    if (a.edges[i] == b.edges[j]) {
      ++i;
      ++j;
    } else if (a.edges[i] < b.edges[j]) {
      ++diff;
      ++i;
    } else {
      ++diff;
      ++j;
    }
  }
  diff += static_cast<int>((a.edges.size() - i) + (b.edges.size() - j));
  return diff;
}

void prune_non_terminal_leaves(GraphRef g, SteinerTree& tree) {
  prune_leaves_keeping(g, tree, g.terminals());
}

void prune_leaves_keeping(GraphRef g, SteinerTree& tree, const std::vector<Vertex>& keep) {
  const Instance& inst = g.instance();
  std::vector<std::uint8_t> kept(inst.vertex_count(), 0);
  for (Vertex v : keep) kept[v] = 1;
  std::vector<int> degree(inst.vertex_count(), 0);
  std::vector<std::vector<EdgeId>> inc(inst.vertex_count());
  std::vector<std::uint8_t> removed(inst.edge_count(), 0);
  for (EdgeId e : tree.edges) {
    const Edge& ed = inst.edge(e);
    ++degree[ed.u];
    ++degree[ed.v];
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < inst.vertex_count(); ++v)
    if (degree[v] == 1 && !kept[v]) stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (degree[v] != 1 || kept[v]) continue;
    for (EdgeId e : inc[v]) {
      if (removed[e]) continue;
      removed[e] = 1;
      Vertex w = inst.other_end(e, v);
      --degree[v];
      --degree[w];
      if (degree[w] == 1 && !kept[w]) stack.push_back(w);
    }
  }
  std::vector<EdgeId> surviving;
  surviving.reserve(tree.edges.size());
  for (EdgeId e : tree.edges)
    if (!removed[e]) surviving.push_back(e);
  tree.edges = std::move(surviving);
  tree.cost = tree_cost(inst, tree.edges);
}

}  // namespace steiner
