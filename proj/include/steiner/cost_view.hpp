#ifndef STEINER_COST_VIEW_HPP
#define STEINER_COST_VIEW_HPP

#include <vector>

#include "steiner/instance.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Per-edge working costs overlaying an Instance (perturbed, merged, decayed).
// Always nonnegative and clamped to the instance's overflow-safe cap.
struct CostView {
  std::vector<Cost> edge_cost;

  static CostView original(const Instance& inst) {
    CostView v;
    v.edge_cost.resize(inst.edge_count());
    for (EdgeId e = 0; e < inst.edge_count(); ++e) v.edge_cost[e] = inst.edge(e).cost;
    return v;
  }

  Cost operator[](EdgeId e) const { return edge_cost[e]; }
};

}  // namespace steiner

#endif
