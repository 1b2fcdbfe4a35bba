#ifndef STEINER_LOCALSEARCH_HPP
#define STEINER_LOCALSEARCH_HPP

#include <vector>

#include "steiner/graph_ref.hpp"
#include "steiner/perturb.hpp"
#include "steiner/rng.hpp"
#include "steiner/tree.hpp"

namespace steiner {

struct PassResult {
  SteinerTree tree;
  bool improved = false;
  int moves_applied = 0;
};

// Key vertices are Steiner vertices of tree degree >= 3; key paths partition
// the tree's edges into maximal paths whose internal vertices are degree-2
// Steiner vertices and whose endpoints lie in K_S (key vertices) or T.
struct KeyPath {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  std::vector<EdgeId> edges;
  std::vector<Vertex> internal;
  Cost cost = 0;
};

struct KeyDecomposition {
  std::vector<Vertex> key_vertices;
  std::vector<KeyPath> key_paths;
  std::vector<std::vector<int>> paths_at;  // per vertex: indices of incident key paths
};

KeyDecomposition decompose(GraphRef g, const SteinerTree& tree);

// Steiner-vertex insertion: for each non-tree vertex, the gain of re-running
// the MST over V_S + {v}; improving insertions applied greedily.
PassResult pass_v(GraphRef g, const SteinerTree& tree);

// Steiner-vertex elimination. Not part of the default vq pipeline (key-vertex
// removal is almost always at least as good) but exported for tests, variants
// and the branch-and-bound primal step.
PassResult pass_u(GraphRef g, const SteinerTree& tree);

// Key-path exchange plus key-vertex elimination in one pass; moves touching
// already-modified parts of the tree are skipped so that all applied moves
// are independent.
PassResult pass_q(GraphRef g, const SteinerTree& tree);

// Very expensive insertion neighborhood used by the MSK variant: re-run SPH
// with T + {v} as terminals, rooted at v, keep the result if cheaper.
PassResult key_vertex_insertion_pass(GraphRef g, const SteinerTree& tree, Rng& rng);

struct VqOptions {
  // When set, the first three alternating passes run on the perturbed costs,
  // decaying toward the originals between passes; then the original costs are
  // restored and the search runs to convergence.
  const PerturbationProfile* schedule = nullptr;
  double decay_alpha = 0.5;
  bool use_key_vertex_insertion = false;
  Rng* rng = nullptr;  // required by use_key_vertex_insertion
  int max_passes = 64;
};

// Alternates pass_v and pass_q until neither improves.
SteinerTree vq(GraphRef g, SteinerTree tree, const VqOptions& opts = {});

}  // namespace steiner

#endif
