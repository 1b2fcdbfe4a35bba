#ifndef STEINER_TREE_HPP
#define STEINER_TREE_HPP

#include <string>
#include <vector>

#include "steiner/graph_ref.hpp"
#include "steiner/instance.hpp"
#include "steiner/types.hpp"

namespace steiner {

// A feasible solution: a tree spanning all terminals. The edge list is kept
// sorted, so it doubles as the canonical signature used by the elite pool.
// An empty edge set is the (cost 0) solution of a single-terminal instance.
struct SteinerTree {
  std::vector<EdgeId> edges;
  Cost cost = 0;

  void normalize(const Instance& inst);  // sorts edges, recomputes cost
  std::vector<Vertex> vertex_set(const Instance& inst) const;
  std::vector<std::uint8_t> vertex_mask(const Instance& inst) const;
  bool operator==(const SteinerTree& o) const { return edges == o.edges; }
};

// Sum of member edge costs (independent of the cached value).
Cost tree_cost(const Instance& inst, const std::vector<EdgeId>& edges);

struct ValidationReport {
  bool ok = false;
  Cost cost = 0;
  std::vector<std::string> violations;
};

// Gate run on every solution exchanged between modules: connectivity,
// acyclicity, terminal coverage, the non-terminal-leaf rule, cost recompute.
ValidationReport validate(GraphRef g, const SteinerTree& tree);

// |symmetric difference| of the two (sorted) edge sets.
int edge_symmetric_difference(const SteinerTree& a, const SteinerTree& b);

// Drops non-terminal leaves repeatedly; recomputes cost.
void prune_non_terminal_leaves(GraphRef g, SteinerTree& tree);

// Same, but with an explicit set of vertices to keep as leaves.
void prune_leaves_keeping(GraphRef g, SteinerTree& tree, const std::vector<Vertex>& keep);

}  // namespace steiner

#endif
