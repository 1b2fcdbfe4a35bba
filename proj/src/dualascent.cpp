#include "steiner/dualascent.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

DualAscent::DualAscent(GraphRef g, Vertex root) : g_(g), root_(root) {
  const Instance& inst = g_.instance();
  reduced_.resize(inst.arc_count());
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    reduced_[2 * e] = inst.edge(e).cost;
    reduced_[2 * e + 1] = inst.edge(e).cost;
  }

  alive_in_degree_.assign(inst.vertex_count(), 0);
  for (EdgeId e = 0; e < inst.edge_count(); ++e)
    if (g_.edge_ok(e)) {
      ++alive_in_degree_[inst.edge(e).u];
      ++alive_in_degree_[inst.edge(e).v];
    }

  is_active_.assign(inst.vertex_count(), 0);
  stamp_.assign(inst.vertex_count(), 0);
  in_component_.assign(inst.vertex_count(), 0);
  for (Vertex t : g_.terminals()) {
    if (t == root_) continue;
    is_active_[t] = 1;
    ++active_count_;
    // initial score: the vc = 1 case of the score formula
    push_active(t, component_score(alive_in_degree_[t], 1));
  }
}

void DualAscent::push_active(Vertex v, long long priority) {
  queue_.push({priority, ++stamp_[v], v});
}

DualAscent::Scan DualAscent::scan_component(Vertex v) {
  const Instance& inst = g_.instance();
  ++epoch_;
  component_.clear();
  candidate_arcs_.clear();
  component_.push_back(v);
  in_component_[v] = epoch_;
  component_in_degree_ = alive_in_degree_[v];

  // reverse BFS over saturated arcs; unsaturated incoming arcs go to L,
  // possibly with tails that later join the component (filtered in pass 2)
  for (size_t head = 0; head < component_.size(); ++head) {
    Vertex b = component_[head];
    for (EdgeId e : inst.incident(b)) {
      if (!g_.edge_ok(e)) continue;
      ArcId a = inst.arc_into(e, b);
      Vertex tail = inst.arc_tail(a);
      if (reduced_[a] == 0) {
        if (in_component_[tail] == epoch_) continue;
        if (tail == root_) return Scan::kHitRoot;
        if (is_active_[tail]) return Scan::kHitActive;
        in_component_[tail] = epoch_;
        component_.push_back(tail);
        component_in_degree_ += alive_in_degree_[tail];
      } else {
        candidate_arcs_.push_back(a);
      }
    }
  }
  return Scan::kRootComponent;
}

DualAscent::Step DualAscent::step(double eager_slack) {
  const Instance& inst = g_.instance();
  if (active_count_ == 0) return Step::kDone;

  if (active_count_ == 1) {
    Vertex last = kNoVertex;
    for (Vertex v = 0; v < inst.vertex_count(); ++v)
      if (is_active_[v]) last = v;
    if (!last_component_shortcut(last)) return Step::kInfeasible;
    is_active_[last] = 0;
    active_count_ = 0;
    return Step::kDone;
  }

  // discard stale entries
  while (!queue_.empty() && queue_.top().stamp != stamp_[queue_.top().v]) queue_.pop();
  if (queue_.empty()) return Step::kInfeasible;  // active terminals but no entries
  QueueEntry top = queue_.top();
  queue_.pop();
  Vertex v = top.v;

  Scan scan = scan_component(v);
  if (scan != Scan::kRootComponent) {
    is_active_[v] = 0;
    --active_count_;
    ++deactivations_;
    return Step::kDeactivated;
  }

  long long actual =
      component_score(component_in_degree_, static_cast<long long>(component_.size()));

  // lazy/eager selection: augment only while the true score stays within
  // eager_slack of the runner-up's priority
  while (!queue_.empty() && queue_.top().stamp != stamp_[queue_.top().v]) queue_.pop();
  if (!queue_.empty()) {
    long long second = queue_.top().priority;
    if (static_cast<double>(actual) > static_cast<double>(second) * (1.0 + eager_slack)) {
      push_active(v, actual);
      return Step::kRequeued;
    }
  }

  // pass 2: drop arcs whose tail joined the component; find the bottleneck
  Cost delta = kInfCost;
  size_t keep = 0;
  for (ArcId a : candidate_arcs_) {
    if (in_component_[inst.arc_tail(a)] == epoch_) continue;
    candidate_arcs_[keep++] = a;
    delta = std::min(delta, reduced_[a]);
  }
  candidate_arcs_.resize(keep);
  if (candidate_arcs_.empty()) return Step::kInfeasible;  // v cut off from the root

  // pass 3: augment, collect tails of newly saturated arcs, refresh score
  lower_bound_ += delta;
  long long grown_in_degree = component_in_degree_;
  long long grown_count = static_cast<long long>(component_.size());
  for (ArcId a : candidate_arcs_) {
    reduced_[a] -= delta;
    if (reduced_[a] == 0) {
      Vertex tail = inst.arc_tail(a);
      if (in_component_[tail] != epoch_) {
        in_component_[tail] = epoch_;
        grown_in_degree += alive_in_degree_[tail];
        ++grown_count;
      }
    }
  }
  ++augmentations_;
  push_active(v, component_score(grown_in_degree, grown_count));
  return Step::kAugmented;
}

bool DualAscent::last_component_shortcut(Vertex v) {
  const Instance& inst = g_.instance();
  const int n = inst.vertex_count();

  std::vector<Cost> dist(n, kInfCost);
  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[root_] = 0;
  pq.push({0, root_});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (EdgeId e : inst.incident(u)) {
      if (!g_.edge_ok(e)) continue;
      Vertex w = inst.other_end(e, u);
      ArcId a = inst.arc_into(e, w);  // tail u, head w
      Cost nd = saturating_add(d, reduced_[a]);
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  if (dist[v] == kInfCost) return false;
  const Cost bound_gain = dist[v];
  lower_bound_ += bound_gain;
  if (bound_gain == 0) return true;

  // Exact reduced-cost update for the implied nested cuts
  // W_theta = {x : dhat(x) >= theta}, theta in (0, dist(v)]: an arc loses
  // max(0, dhat(head) - dhat(tail)) of residual; nothing ever gains residual,
  // so previously saturated arcs stay saturated and the root still reaches
  // every terminal through saturated arcs.
  auto dhat = [&](Vertex x) { return dist[x] >= bound_gain ? bound_gain : dist[x]; };
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (!g_.edge_ok(e)) continue;
    for (ArcId a : {2 * e, 2 * e + 1}) {
      Cost drop = dhat(inst.arc_head(a)) - dhat(inst.arc_tail(a));
      if (drop > 0) reduced_[a] -= drop;
    }
  }
  ++augmentations_;
  return true;
}

bool DualAscent::run(double eager_slack) {
  while (true) {
    Step s = step(eager_slack);
    if (s == Step::kDone) return true;
    if (s == Step::kInfeasible) return false;
  }
}

DualAscentResult dual_ascent(GraphRef g, Vertex root, double eager_slack) {
  DualAscent da(g, root);
  DualAscentResult res;
  res.feasible = da.run(eager_slack);
  res.lower_bound = da.lower_bound();
  res.root = root;
  res.augmentations = da.augmentations();
  res.deactivations = da.deactivations();
  return res;
}

}  // namespace steiner
