#include "steiner/reduce.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "steiner/dsu.hpp"
#include "steiner/mst.hpp"
#include "steiner/shortest_paths.hpp"

namespace steiner {

namespace {

struct WorkEdge {
  Vertex u, v;
  Cost cost;
  std::vector<EdgeId> orig;
  bool alive = true;
};

class Reducer {
 public:
  Reducer(const Instance& inst, ReduceMode mode) : inst_(inst), mode_(mode) {
    const int n = inst.vertex_count();
    adj_.resize(n);
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      const Edge& ed = inst.edge(e);
      work_.push_back({ed.u, ed.v, ed.cost, {e}, true});
      adj_[ed.u].push_back(static_cast<int>(work_.size()) - 1);
      adj_[ed.v].push_back(static_cast<int>(work_.size()) - 1);
    }
    vertex_alive_.assign(n, 1);
  }

  ReducedInstance run() {
    // cheap degree rules first, the Voronoi sweep last, bounded rounds
    for (int round = 0; round < 10; ++round) {
      bool changed = false;
      changed |= degree_rules();
      changed |= bottleneck_local();
      changed |= bottleneck_voronoi();
      if (!changed) break;
    }

    std::vector<Edge> edges;
    ReducedInstance out;
    for (const WorkEdge& we : work_)
      if (we.alive) {
        edges.push_back({we.u, we.v, we.cost});
        out.trace.edge_origin.push_back(we.orig);
      }
    out.trace.events = std::move(events_);
    out.instance =
        std::make_unique<Instance>(inst_.vertex_count(), std::move(edges), inst_.terminals());
    return out;
  }

 private:
  int alive_degree(Vertex v) const {
    int d = 0;
    for (int i : adj_[v])
      if (work_[i].alive) ++d;
    return d;
  }

  Vertex other(int i, Vertex v) const { return work_[i].u == v ? work_[i].v : work_[i].u; }

  void kill_edge(int i) { work_[i].alive = false; }

  // degree-1 deletion and (full mode) degree-2 contraction, cascading
  bool degree_rules() {
    bool changed = false;
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < inst_.vertex_count(); ++v) queue.push_back(v);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (!vertex_alive_[v] || inst_.is_terminal(v)) continue;

      std::vector<int> inc;
      for (int i : adj_[v])
        if (work_[i].alive) inc.push_back(i);

      if (inc.size() == 1) {
        Vertex w = other(inc[0], v);
        events_.push_back({ReductionTrace::Event::Kind::kDeleteVertex, v, kNoVertex, kNoVertex,
                           work_[inc[0]].orig});
        kill_edge(inc[0]);
        vertex_alive_[v] = 0;
        queue.push_back(w);
        changed = true;
      } else if (inc.size() == 2 && mode_ == ReduceMode::kFull) {
        Vertex a = other(inc[0], v), b = other(inc[1], v);
        std::vector<EdgeId> merged = work_[inc[0]].orig;
        merged.insert(merged.end(), work_[inc[1]].orig.begin(), work_[inc[1]].orig.end());
        kill_edge(inc[0]);
        kill_edge(inc[1]);
        vertex_alive_[v] = 0;
        changed = true;
        if (a == b) {
          // both edges run to the same neighbor: the path is a dead loop
          events_.push_back(
              {ReductionTrace::Event::Kind::kDeleteVertex, v, kNoVertex, kNoVertex, merged});
          queue.push_back(a);
          continue;
        }
        Cost cost = work_[inc[0]].cost + work_[inc[1]].cost;
        events_.push_back({ReductionTrace::Event::Kind::kContract, v, a, b, merged});

        int parallel = -1;
        for (int i : adj_[a])
          if (work_[i].alive && other(i, a) == b) parallel = i;

        if (parallel >= 0 && work_[parallel].cost <= cost) {
          // existing edge wins; the contracted path is dropped outright
          events_.push_back(
              {ReductionTrace::Event::Kind::kDeleteEdge, kNoVertex, kNoVertex, kNoVertex, merged});
        } else {
          work_.push_back({a, b, cost, merged, true});
          int idx = static_cast<int>(work_.size()) - 1;
          adj_[a].push_back(idx);
          adj_[b].push_back(idx);
          if (parallel >= 0) {
            events_.push_back({ReductionTrace::Event::Kind::kDeleteEdge, kNoVertex, kNoVertex,
                               kNoVertex, work_[parallel].orig});
            kill_edge(parallel);
          }
        }
        queue.push_back(a);
        queue.push_back(b);
      }
    }
    return changed;
  }

  // remove (u,v) when a common neighbor x gives cost(u,x)+cost(x,v) <= cost(u,v);
  // only tried while deg(u)+deg(v) stays small
  bool bottleneck_local() {
    bool changed = false;
    for (int i = 0; i < static_cast<int>(work_.size()); ++i) {
      if (!work_[i].alive) continue;
      Vertex u = work_[i].u, v = work_[i].v;
      if (alive_degree(u) + alive_degree(v) > 20) continue;
      bool removable = false;
      for (int j : adj_[u]) {
        if (!work_[j].alive || j == i) continue;
        Vertex x = other(j, u);
        if (x == v) continue;
        for (int k : adj_[v]) {
          if (!work_[k].alive || k == i) continue;
          if (other(k, v) != x) continue;
          if (work_[j].cost + work_[k].cost <= work_[i].cost) {
            removable = true;
            break;
          }
        }
        if (removable) break;
      }
      if (removable) {
        events_.push_back({ReductionTrace::Event::Kind::kDeleteEdge, kNoVertex, kNoVertex,
                           kNoVertex, work_[i].orig});
        kill_edge(i);
        changed = true;
      }
    }
    return changed;
  }

  // Voronoi/union-find sweep: E_t edges (realizing the distance-network MST)
  // join their endpoints' classes; a free edge whose endpoints already meet
  // in the union-find and whose endpoints are no farther from their base
  // terminals than the edge is long gets deleted.
  bool bottleneck_voronoi() {
    std::vector<Edge> edges;
    std::vector<int> work_of;
    for (int i = 0; i < static_cast<int>(work_.size()); ++i)
      if (work_[i].alive) {
        edges.push_back({work_[i].u, work_[i].v, work_[i].cost});
        work_of.push_back(i);
      }
    if (edges.empty()) return false;
    Instance temp(inst_.vertex_count(), edges, inst_.terminals());
    if (temp.edge_count() != static_cast<int>(edges.size())) return false;  // parallel slipped in
    GraphRef g(temp);

    VoronoiDiagram vor = build_voronoi(g);
    auto chosen = distance_network_mst(g, vor);
    if (!chosen) return false;  // terminals not connected; nothing safe to say

    std::vector<std::uint8_t> in_et(temp.edge_count(), 0);
    for (EdgeId b : *chosen)
      for (EdgeId e : realize_boundary_path(temp, vor, b)) in_et[e] = 1;
    std::vector<std::uint8_t> is_parent(temp.edge_count(), 0);
    for (Vertex v = 0; v < temp.vertex_count(); ++v)
      if (vor.vp(v) != kNoEdge) is_parent[vor.vp(v)] = 1;

    struct Item {
      Cost cost;
      EdgeId e;
      bool et;
    };
    std::vector<Item> list;
    for (EdgeId e = 0; e < temp.edge_count(); ++e) {
      if (in_et[e])
        list.push_back({temp.edge(e).cost, e, true});
      else if (!is_parent[e])
        list.push_back({temp.edge(e).cost, e, false});
    }
    std::sort(list.begin(), list.end(), [](const Item& a, const Item& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      if (a.et != b.et) return a.et;  // E_t wins ties
      return a.e < b.e;
    });

    DisjointSets dsu(temp.vertex_count());
    bool changed = false;
    for (const Item& it : list) {
      const Edge& ed = temp.edge(it.e);
      if (it.et) {
        dsu.unite(ed.u, ed.v);
      } else if (dsu.same(ed.u, ed.v) && vor.vd(ed.u) != kInfCost && vor.vd(ed.u) <= it.cost &&
                 vor.vd(ed.v) != kInfCost && vor.vd(ed.v) <= it.cost) {
        events_.push_back({ReductionTrace::Event::Kind::kDeleteEdge, kNoVertex, kNoVertex,
                           kNoVertex, work_[work_of[it.e]].orig});
        kill_edge(work_of[it.e]);
        changed = true;
      }
    }
    return changed;
  }

  const Instance& inst_;
  ReduceMode mode_;
  std::vector<WorkEdge> work_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> vertex_alive_;
  std::vector<ReductionTrace::Event> events_;
};

}  // namespace

ReducedInstance preprocess(const Instance& inst, ReduceMode mode) {
  Reducer r(inst, mode);
  return r.run();
}

SteinerTree lift(const Instance& original, const ReductionTrace& trace,
                 const SteinerTree& reduced_tree) {
  SteinerTree out;
  for (EdgeId e : reduced_tree.edges) {
    if (e < 0 || e >= static_cast<EdgeId>(trace.edge_origin.size()))
      throw std::runtime_error("lift: reduced tree does not match trace");
    for (EdgeId o : trace.edge_origin[e]) out.edges.push_back(o);
  }
  out.normalize(original);
  return out;
}

void ReductionTrace::write_sidecar(std::ostream& out) const {
  auto edge_list = [](const std::vector<EdgeId>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ids[i]);
    }
    return s;
  };
  for (const Event& ev : events_alias(*this)) {
    switch (ev.kind) {
      case Event::Kind::kDeleteVertex:
        out << "delete-vertex " << (ev.v + 1) << " edges=" << edge_list(ev.original) << "\n";
        break;
      case Event::Kind::kContract:
        out << "contract " << (ev.v + 1) << " -> (" << (ev.u + 1) << "," << (ev.w + 1)
            << ") edges=" << edge_list(ev.original) << "\n";
        break;
      case Event::Kind::kDeleteEdge:
        out << "delete-edge edges=" << edge_list(ev.original) << "\n";
        break;
    }
  }
}

}  // namespace steiner
