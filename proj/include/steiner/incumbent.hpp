#ifndef STEINER_INCUMBENT_HPP
#define STEINER_INCUMBENT_HPP

#include <atomic>
#include <mutex>
#include <optional>

#include "steiner/tree.hpp"

namespace steiner {

// Best solution shared between the multistart and branch-and-bound workers.
// The cost is published atomically first and the tree swapped under the lock
// second; a reader may see a momentarily stale tree, but never a cost above
// the true best -- which is all branch-and-bound needs for pruning.
class SharedIncumbent {
 public:
  Cost cost() const { return cost_.load(std::memory_order_acquire); }

  // Strict improvements only; returns whether the offer won.
  bool offer(const SteinerTree& tree) {
    Cost c = tree.cost;
    Cost cur = cost_.load(std::memory_order_acquire);
    while (c < cur) {
      if (cost_.compare_exchange_weak(cur, c, std::memory_order_acq_rel)) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!has_tree_ || c < tree_.cost) {
          tree_ = tree;
          has_tree_ = true;
        }
        return true;
      }
    }
    return false;
  }

  std::optional<SteinerTree> tree() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!has_tree_) return std::nullopt;
    return tree_;
  }

  void request_stop() { stop_.store(true, std::memory_order_release); }
  bool stop_requested() const { return stop_.load(std::memory_order_acquire); }

  void mark_optimal() { optimal_.store(true, std::memory_order_release); }
  bool optimal() const { return optimal_.load(std::memory_order_acquire); }

 private:
  std::atomic<Cost> cost_{kInfCost};
  std::atomic<bool> stop_{false};
  std::atomic<bool> optimal_{false};
  mutable std::mutex mu_;
  SteinerTree tree_;
  bool has_tree_ = false;
};

}  // namespace steiner

#endif
