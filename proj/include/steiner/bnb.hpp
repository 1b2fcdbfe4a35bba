#ifndef STEINER_BNB_HPP
#define STEINER_BNB_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "steiner/incumbent.hpp"
#include "steiner/instance.hpp"
#include "steiner/tree.hpp"

namespace steiner {

enum class BnbStrategy { kDefault, kScatter };

struct BnbLimits {
  long long node_cap = -1;  // < 0: unlimited
  int depth_cap = -1;       // reaching it aborts the whole search (GMS rule)
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::function<bool()> should_stop;  // cooperative stop (GMS)
};

struct ScatterParams {
  int depth_limit = 14;
  int probes_zero = 1000;  // c for side 0; subset size is 32 - depth
  int probes_one = 2000;   // c for side 1
  int subset_one = 10;     // s for side 1
};

struct BnbConfig {
  std::optional<Cost> ub_hint;
  BnbLimits limits;
  BnbStrategy strategy = BnbStrategy::kDefault;
  ScatterParams scatter;
  std::uint64_t seed = 1;
  SharedIncumbent* shared = nullptr;  // GMS contract; may be null
  // child visits in DFS order as (vertex, side); side 1 must come first
  std::vector<std::pair<Vertex, int>>* child_log = nullptr;
};

struct BnbResult {
  Cost best_cost = kInfCost;
  std::optional<SteinerTree> best_tree;
  bool proved_optimal = false;
  bool infeasible = false;
  long long nodes_visited = 0;
  int max_depth = 0;
  long long edges_fixed = 0;
  Cost bound_at_stop = 0;
};

// Depth-first branch-and-bound on vertices: dual ascent bounds with a random
// terminal root per node, SPH on the saturated subgraph (plus one insertion
// and one elimination pass) for primal bounds, extended-reduced-cost edge
// fixing, and the single-child rule when at least |E|/5 edges get fixed.
BnbResult bnb_solve(const Instance& inst, const BnbConfig& config);

// Scatter branching combination (sigma0^3 * sigma1)^(1/4).
inline double scatter_final_score(double sigma0, double sigma1) {
  return std::pow(sigma0 * sigma0 * sigma0 * sigma1, 0.25);
}

// Mean-bound score of one vertex; vertices never sampled on both sides are
// excluded from the argmax.
inline std::optional<double> scatter_vertex_score(long long cnt0, double sum0, long long cnt1,
                                                  double sum1) {
  if (cnt0 <= 0 || cnt1 <= 0) return std::nullopt;
  return scatter_final_score(sum0 / static_cast<double>(cnt0),
                             sum1 / static_cast<double>(cnt1));
}

}  // namespace steiner

#endif
