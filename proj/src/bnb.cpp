#include "steiner/bnb.hpp"

#include <algorithm>
#include <queue>

#include "steiner/construct.hpp"
#include "steiner/dualascent.hpp"
#include "steiner/localsearch.hpp"
#include "steiner/mst.hpp"
#include "steiner/multistart.hpp"
#include "steiner/rng.hpp"

namespace steiner {

namespace {

class BnbSolver {
 public:
  BnbSolver(const Instance& inst, const BnbConfig& cfg)
      : inst_(inst), cfg_(cfg), view_(inst), rng_(Rng::stream(cfg.seed, 0xb6b)) {}

  BnbResult solve() {
    GraphRef g(inst_);
    if (inst_.terminal_count() <= 1) {
      res_.best_cost = 0;
      res_.best_tree = SteinerTree{};
      res_.proved_optimal = true;
      res_.bound_at_stop = 0;
      return res_;
    }

    if (cfg_.ub_hint) {
      best_cost_ = *cfg_.ub_hint;
    } else {
      Rng warm = Rng::stream(cfg_.seed, 0x5eed);
      auto start = generate_solution(inst_, warm);
      if (start) {
        best_cost_ = start->cost;
        best_tree_ = *start;
        publish();
      }
    }

    bool complete = dfs(0, 0);

    res_.best_cost = best_cost_;
    res_.best_tree = best_tree_;
    res_.proved_optimal = complete;
    res_.infeasible = best_cost_ == kInfCost && complete;
    res_.bound_at_stop = complete ? best_cost_ : std::min(open_bound_, best_cost_);
    return res_;
  }

 private:
  Cost upper_bound() const {
    Cost ub = best_cost_;
    if (cfg_.shared != nullptr) ub = std::min(ub, cfg_.shared->cost());
    return ub;
  }

  void publish() {
    if (cfg_.shared != nullptr && best_tree_) cfg_.shared->offer(*best_tree_);
  }

  bool stop_requested() const {
    if (cfg_.limits.node_cap >= 0 && res_.nodes_visited >= cfg_.limits.node_cap) return true;
    if (cfg_.limits.deadline && std::chrono::steady_clock::now() >= *cfg_.limits.deadline)
      return true;
    if (cfg_.limits.should_stop && cfg_.limits.should_stop()) return true;
    if (cfg_.shared != nullptr && cfg_.shared->stop_requested()) return true;
    return false;
  }

  std::vector<Vertex> alive_terminals() const {
    std::vector<Vertex> t;
    for (Vertex v = 0; v < inst_.vertex_count(); ++v)
      if (view_.terminal[v] && view_.vertex_alive[v]) t.push_back(v);
    return t;
  }

  // Non-terminal, not fixed either way, usable.
  bool is_free(Vertex v) const { return view_.vertex_alive[v] && !view_.terminal[v]; }

  // Offer a tree spanning the node's terminal set as a global solution:
  // promoted vertices lose their terminal status, so prune against the
  // original terminals before validating.
  void offer_global(SteinerTree tree) {
    GraphRef orig(inst_);
    prune_leaves_keeping(orig, tree, inst_.terminals());
    tree.normalize(inst_);
    ValidationReport rep = validate(orig, tree);
    if (!rep.ok) return;
    if (tree.cost < best_cost_) {
      best_cost_ = tree.cost;
      best_tree_ = tree;
      publish();
    }
  }

  // Returns true if the subtree was fully explored (no limit aborts).
  bool dfs(int depth, Cost parent_bound) {
    if (stop_requested() ||
        (cfg_.limits.depth_cap >= 0 && depth >= cfg_.limits.depth_cap)) {
      open_bound_ = std::min(open_bound_, parent_bound);
      return false;
    }
    ++res_.nodes_visited;
    res_.max_depth = std::max(res_.max_depth, depth);

    GraphRef g(inst_, view_);
    std::vector<Vertex> terms = alive_terminals();
    Vertex root = terms[rng_.next_int(0, static_cast<std::int64_t>(terms.size()) - 1)];

    DualAscent da(g, root);
    if (!da.run()) return true;  // some terminal unreachable: infeasible node
    Cost lb = da.lower_bound();
    if (lb >= upper_bound()) return true;

    // primal: SPH restricted to saturated arcs, then one insertion pass and
    // one elimination pass over all alive edges
    std::optional<SteinerTree> primal;
    {
      CostView costs = CostView::original(inst_);
      auto sat = sph(g, costs, root, [&](ArcId a) { return da.saturated(a); });
      if (sat) {
        SteinerTree t = vq_single_primal(g, std::move(*sat));
        offer_global(t);
        primal = std::move(t);
      }
    }

    // extended reduced cost fixing: arc (u,v) is fixable iff
    // dist_r(u) + cbar(u,v) >= UB - LB; an edge goes away when both of its
    // arcs are fixable
    int alive_before = g.alive_edge_count();
    std::vector<EdgeId> fixed;
    Cost ub = upper_bound();
    if (ub != kInfCost) {
      std::vector<Cost> dist_r = reduced_cost_distances(g, da, root);
      Cost gap = ub - lb;
      for (EdgeId e = 0; e < inst_.edge_count(); ++e) {
        if (!g.edge_ok(e)) continue;
        const Edge& ed = inst_.edge(e);
        bool fix_uv = saturating_add(dist_r[ed.u], da.reduced_costs()[2 * e]) >= gap;
        bool fix_vu = saturating_add(dist_r[ed.v], da.reduced_costs()[2 * e + 1]) >= gap;
        if (fix_uv && fix_vu) {
          view_.edge_alive[e] = 0;
          fixed.push_back(e);
        }
      }
      res_.edges_fixed += static_cast<long long>(fixed.size());
    }

    bool complete;
    if (static_cast<int>(fixed.size()) >= std::max(1, alive_before / 5)) {
      complete = dfs(depth + 1, lb);  // single child
    } else {
      Vertex v = select_branch_vertex(primal, da, depth);
      if (v == kNoVertex) {
        // every alive vertex is a terminal: the node optimum is the MST of
        // the remaining graph
        std::vector<std::uint8_t> all(inst_.vertex_count(), 1);
        auto mst = mst_on_induced(g, all);
        if (mst) offer_global(std::move(*mst));
        complete = true;
      } else {
        if (cfg_.child_log) cfg_.child_log->push_back({v, 1});
        view_.terminal[v] = 1;  // "one" side first
        complete = dfs(depth + 1, lb);
        view_.terminal[v] = 0;
        if (complete) {
          if (cfg_.child_log) cfg_.child_log->push_back({v, 0});
          view_.vertex_alive[v] = 0;
          complete = dfs(depth + 1, lb);
          view_.vertex_alive[v] = 1;
        }
      }
    }

    for (EdgeId e : fixed) view_.edge_alive[e] = 1;
    if (!complete) open_bound_ = std::min(open_bound_, lb);
    return complete;
  }

  // One pass_v then one pass_u, per the primal-bound recipe.
  SteinerTree vq_single_primal(GraphRef g, SteinerTree t) {
    t = pass_v(g, t).tree;
    t = pass_u(g, t).tree;
    return t;
  }

  std::vector<Cost> reduced_cost_distances(GraphRef g, const DualAscent& da, Vertex root) {
    const int n = inst_.vertex_count();
    std::vector<Cost> dist(n, kInfCost);
    using Entry = std::pair<Cost, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[root] = 0;
    pq.push({0, root});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[u]) continue;
      for (EdgeId e : inst_.incident(u)) {
        if (!g.edge_ok(e)) continue;
        Vertex w = inst_.other_end(e, u);
        ArcId a = inst_.arc_into(e, w);
        Cost nd = saturating_add(d, da.reduced_costs()[a]);
        if (nd < dist[w]) {
          dist[w] = nd;
          pq.push({nd, w});
        }
      }
    }
    return dist;
  }

  Vertex select_branch_vertex(const std::optional<SteinerTree>& primal, const DualAscent& da,
                              int depth) {
    if (cfg_.strategy == BnbStrategy::kScatter && depth <= cfg_.scatter.depth_limit) {
      Vertex v = scatter_select(depth);
      if (v != kNoVertex) return v;
    }

    std::vector<int> tree_degree(inst_.vertex_count(), 0);
    if (primal)
      for (EdgeId e : primal->edges) {
        ++tree_degree[inst_.edge(e).u];
        ++tree_degree[inst_.edge(e).v];
      }

    GraphRef g(inst_, view_);
    auto tie_key = [&](Vertex v) {
      long long sat_in = 0, sat_out = 0, deg = 0;
      for (EdgeId e : inst_.incident(v)) {
        if (!g.edge_ok(e)) continue;
        ++deg;
        if (da.saturated(inst_.arc_into(e, v))) ++sat_in;
        if (da.saturated(inst_.arc_into(e, inst_.other_end(e, v)))) ++sat_out;
      }
      return sat_in + sat_out + deg;
    };

    // primary: max degree in the primal tree; fall back to all free vertices
    // (degree 0) when the tree has no free Steiner vertex, so the search
    // stays exact even when the primal is uninformative
    int best_deg = -1;
    for (Vertex v = 0; v < inst_.vertex_count(); ++v)
      if (is_free(v)) best_deg = std::max(best_deg, tree_degree[v]);
    if (best_deg < 0) return kNoVertex;

    long long best_key = -1;
    std::vector<Vertex> ties;
    for (Vertex v = 0; v < inst_.vertex_count(); ++v) {
      if (!is_free(v) || tree_degree[v] != best_deg) continue;
      long long key = tie_key(v);
      if (key > best_key) {
        best_key = key;
        ties.clear();
      }
      if (key == best_key) ties.push_back(v);
    }
    if (ties.empty()) return kNoVertex;
    return ties[rng_.next_int(0, static_cast<std::int64_t>(ties.size()) - 1)];
  }

  Vertex scatter_select(int depth) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < inst_.vertex_count(); ++v)
      if (is_free(v)) free.push_back(v);
    if (free.empty()) return kNoVertex;

    const int n = inst_.vertex_count();
    std::vector<double> sum0(n, 0), sum1(n, 0);
    std::vector<long long> cnt0(n, 0), cnt1(n, 0);

    auto probe_side = [&](int side, int probes, int subset_size) {
      int s = std::min<int>(subset_size, static_cast<int>(free.size()));
      if (s <= 0) return;
      std::vector<Vertex> pool = free;
      for (int p = 0; p < probes; ++p) {
        // partial Fisher-Yates: the first s entries become the subset
        for (int i = 0; i < s; ++i) {
          auto j = rng_.next_int(i, static_cast<std::int64_t>(pool.size()) - 1);
          std::swap(pool[i], pool[j]);
        }
        for (int i = 0; i < s; ++i) {
          Vertex v = pool[i];
          if (side == 0)
            view_.vertex_alive[v] = 0;
          else
            view_.terminal[v] = 1;
        }
        GraphRef g(inst_, view_);
        std::vector<Vertex> terms = alive_terminals();
        Vertex root = terms[rng_.next_int(0, static_cast<std::int64_t>(terms.size()) - 1)];
        DualAscentResult r = dual_ascent(g, root);
        Cost ub = upper_bound();
        double bound = r.feasible ? static_cast<double>(r.lower_bound)
                                  : static_cast<double>(ub == kInfCost ? 0 : ub);
        for (int i = 0; i < s; ++i) {
          Vertex v = pool[i];
          if (side == 0) {
            view_.vertex_alive[v] = 1;
            sum0[v] += bound;
            ++cnt0[v];
          } else {
            view_.terminal[v] = 0;
            sum1[v] += bound;
            ++cnt1[v];
          }
        }
      }
    };

    probe_side(0, cfg_.scatter.probes_zero, 32 - depth);
    probe_side(1, cfg_.scatter.probes_one, cfg_.scatter.subset_one);

    double best = -1.0;
    std::vector<Vertex> ties;
    for (Vertex v : free) {
      auto score = scatter_vertex_score(cnt0[v], sum0[v], cnt1[v], sum1[v]);
      if (!score) continue;  // never sampled on both sides: excluded
      if (*score > best) {
        best = *score;
        ties.clear();
      }
      if (*score == best) ties.push_back(v);
    }
    if (ties.empty()) return kNoVertex;
    return ties[rng_.next_int(0, static_cast<std::int64_t>(ties.size()) - 1)];
  }

  const Instance& inst_;
  const BnbConfig& cfg_;
  SubgraphView view_;
  Rng rng_;
  BnbResult res_;
  Cost best_cost_ = kInfCost;
  std::optional<SteinerTree> best_tree_;
  Cost open_bound_ = kInfCost;
};

}  // namespace

BnbResult bnb_solve(const Instance& inst, const BnbConfig& config) {
  BnbSolver solver(inst, config);
  return solver.solve();
}

}  // namespace steiner
