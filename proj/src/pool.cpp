#include "steiner/pool.hpp"

#include <stdexcept>

namespace steiner {

PoolOutcome ElitePool::try_add(const SteinerTree& tree, Rng& rng) {
  for (const SteinerTree& m : members_)
    if (m.edges == tree.edges) return PoolOutcome::kDuplicate;

  if (static_cast<int>(members_.size()) < capacity_) {
    members_.push_back(tree);
    return PoolOutcome::kAdded;
  }

  std::vector<int> eligible;  // victims must be no better than the newcomer
  for (int i = 0; i < static_cast<int>(members_.size()); ++i)
    if (members_[i].cost >= tree.cost) eligible.push_back(i);
  if (eligible.empty()) return PoolOutcome::kRejectedWorse;

  double total = 0.0;
  std::vector<double> weight(eligible.size());
  for (size_t i = 0; i < eligible.size(); ++i) {
    weight[i] = 1.0 / (1.0 + edge_symmetric_difference(members_[eligible[i]], tree));
    total += weight[i];
  }
  double pick = rng.next_double() * total;
  int victim = eligible.back();
  for (size_t i = 0; i < eligible.size(); ++i) {
    pick -= weight[i];
    if (pick < 0.0) {
      victim = eligible[i];
      break;
    }
  }
  members_[victim] = tree;
  return PoolOutcome::kReplaced;
}

SteinerTree ElitePool::sample(Rng& rng) const {
  if (members_.empty()) throw std::logic_error("sample from empty pool");
  return members_[rng.next_int(0, static_cast<std::int64_t>(members_.size()) - 1)];
}

std::optional<SteinerTree> ElitePool::best() const {
  if (members_.empty()) return std::nullopt;
  const SteinerTree* b = &members_[0];
  for (const SteinerTree& m : members_)
    if (m.cost < b->cost) b = &m;
  return *b;
}

}  // namespace steiner
