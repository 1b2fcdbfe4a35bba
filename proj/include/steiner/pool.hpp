#ifndef STEINER_POOL_HPP
#define STEINER_POOL_HPP

#include <optional>
#include <vector>

#include "steiner/rng.hpp"
#include "steiner/tree.hpp"

namespace steiner {

enum class PoolOutcome { kAdded, kDuplicate, kRejectedWorse, kReplaced };

// Bounded archive of distinct elite solutions. A full pool evicts a member
// no better than the newcomer, preferring similar victims: the replacement
// probability is proportional to 1/(1 + |symmetric difference|), which keeps
// the surviving members diverse.
class ElitePool {
 public:
  explicit ElitePool(int capacity) : capacity_(capacity < 1 ? 1 : capacity) {}

  PoolOutcome try_add(const SteinerTree& tree, Rng& rng);
  SteinerTree sample(Rng& rng) const;  // uniform; pool must be nonempty

  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  int capacity() const { return capacity_; }
  const std::vector<SteinerTree>& members() const { return members_; }

  // Cheapest member, if any.
  std::optional<SteinerTree> best() const;

 private:
  int capacity_;
  std::vector<SteinerTree> members_;
};

}  // namespace steiner

#endif
