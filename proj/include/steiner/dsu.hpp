#ifndef STEINER_DSU_HPP
#define STEINER_DSU_HPP

#include <numeric>
#include <vector>

#include "steiner/types.hpp"

namespace steiner {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already in the same class.
  bool unite(Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

  bool same(Vertex x, Vertex y) { return find(x) == find(y); }

 private:
  std::vector<Vertex> parent_;
  std::vector<int> rank_;
};

}  // namespace steiner

#endif
