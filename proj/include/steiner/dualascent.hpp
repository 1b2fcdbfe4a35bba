#ifndef STEINER_DUALASCENT_HPP
#define STEINER_DUALASCENT_HPP

#include <queue>
#include <vector>

#include "steiner/graph_ref.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Score of a root component: an upper bound on its number of incoming arcs.
// The (vc - 1) term discards the arcs of a spanning tree of the component.
// Nondecreasing as the component grows, which is what lazy evaluation needs.
inline long long component_score(long long sum_in_degrees, long long vertex_count) {
  return sum_in_degrees - (vertex_count - 1);
}

// Wong's dual ascent on the bidirected graph. Arc 2e runs u->v of edge e,
// arc 2e+1 runs v->u. Dual variables are never materialized: only the bound
// (sum of raises) and per-arc residuals are kept. Terminals wait in a
// priority queue keyed by a lower bound on their component score; processing
// works in three passes (saturated-arc BFS, candidate-arc filtering, the
// augmentation itself). When a single active terminal remains, a forward
// Dijkstra from the root under reduced costs yields the same bound increase
// in one shot.
class DualAscent {
 public:
  DualAscent(GraphRef g, Vertex root);

  enum class Step { kDeactivated, kAugmented, kRequeued, kInfeasible, kDone };

  // One queue round: pop the most promising active terminal and handle it.
  Step step(double eager_slack);

  // Runs to completion; false when some terminal is unreachable from the
  // root (only possible on masked graphs or disconnected instances).
  bool run(double eager_slack = 0.25);

  Cost lower_bound() const { return lower_bound_; }
  bool saturated(ArcId a) const { return reduced_[a] == 0; }
  const std::vector<Cost>& reduced_costs() const { return reduced_; }
  Vertex root() const { return root_; }
  int active_count() const { return active_count_; }
  int augmentations() const { return augmentations_; }
  int deactivations() const { return deactivations_; }

 private:
  enum class Scan { kRootComponent, kHitActive, kHitRoot };

  Scan scan_component(Vertex v);           // pass 1
  bool last_component_shortcut(Vertex v);  // Dijkstra + potential update
  void push_active(Vertex v, long long priority);

  GraphRef g_;
  Vertex root_;
  std::vector<Cost> reduced_;
  Cost lower_bound_ = 0;

  std::vector<std::uint8_t> is_active_;
  int active_count_ = 0;
  int augmentations_ = 0;
  int deactivations_ = 0;
  std::vector<int> alive_in_degree_;

  struct QueueEntry {
    long long priority;
    std::uint32_t stamp;
    Vertex v;
    bool operator>(const QueueEntry& o) const {
      if (priority != o.priority) return priority > o.priority;
      return v > o.v;
    }
  };
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;
  std::vector<std::uint32_t> stamp_;

  // pass-1/3 scratch, reused across rounds
  std::vector<Vertex> component_;           // S
  std::vector<std::uint32_t> in_component_; // epoch marks
  std::uint32_t epoch_ = 0;
  std::vector<ArcId> candidate_arcs_;       // L (may hold internal arcs until pass 2)
  long long component_in_degree_ = 0;
};

struct DualAscentResult {
  bool feasible = false;
  Cost lower_bound = 0;
  Vertex root = kNoVertex;
  int augmentations = 0;
  int deactivations = 0;
};

// Convenience wrapper: construct, run, summarize (reduced costs discarded).
DualAscentResult dual_ascent(GraphRef g, Vertex root, double eager_slack = 0.25);

}  // namespace steiner

#endif
