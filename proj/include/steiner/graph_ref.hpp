#ifndef STEINER_GRAPH_REF_HPP
#define STEINER_GRAPH_REF_HPP

#include <vector>

#include "steiner/instance.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Delta overlay over an immutable Instance: branch-and-bound deletes edges
// and vertices and promotes vertices to terminals without copying the graph.
struct SubgraphView {
  explicit SubgraphView(const Instance& inst)
      : edge_alive(inst.edge_count(), 1),
        vertex_alive(inst.vertex_count(), 1),
        terminal(inst.vertex_count(), 0) {
    for (Vertex t : inst.terminals()) terminal[t] = 1;
  }

  std::vector<std::uint8_t> edge_alive;
  std::vector<std::uint8_t> vertex_alive;
  std::vector<std::uint8_t> terminal;  // original terminals plus promotions
};

// What every graph algorithm in the solver consumes: the instance, optionally
// masked by a view. Copyable, non-owning.
class GraphRef {
 public:
  GraphRef(const Instance& inst) : inst_(&inst), view_(nullptr) {}  // NOLINT(implicit)
  GraphRef(const Instance& inst, const SubgraphView& view) : inst_(&inst), view_(&view) {}

  const Instance& instance() const { return *inst_; }

  bool edge_ok(EdgeId e) const {
    if (view_ == nullptr) return true;
    const Edge& ed = inst_->edge(e);
    return view_->edge_alive[e] && view_->vertex_alive[ed.u] && view_->vertex_alive[ed.v];
  }
  bool vertex_ok(Vertex v) const { return view_ == nullptr || view_->vertex_alive[v]; }
  bool is_terminal(Vertex v) const {
    return view_ == nullptr ? inst_->is_terminal(v) : view_->terminal[v] != 0;
  }

  std::vector<Vertex> terminals() const {
    if (view_ == nullptr) return inst_->terminals();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < inst_->vertex_count(); ++v)
      if (view_->terminal[v] && view_->vertex_alive[v]) out.push_back(v);
    return out;
  }

  int alive_edge_count() const {
    if (view_ == nullptr) return inst_->edge_count();
    int c = 0;
    for (EdgeId e = 0; e < inst_->edge_count(); ++e)
      if (edge_ok(e)) ++c;
    return c;
  }

 private:
  const Instance* inst_;
  const SubgraphView* view_;
};

}  // namespace steiner

#endif
