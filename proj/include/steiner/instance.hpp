#ifndef STEINER_INSTANCE_HPP
#define STEINER_INSTANCE_HPP

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/types.hpp"

namespace steiner {

struct Edge {
  Vertex u;
  Vertex v;
  Cost cost;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable undirected instance. Construction normalizes the edge list:
// self-loops are dropped and parallel edges collapse to the cheapest copy
// (first occurrence keeps the slot). Safe to share across threads.
class Instance {
 public:
  Instance(int vertex_count, std::vector<Edge> edges, std::vector<Vertex> terminals);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& terminals() const { return terminals_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }
  bool is_terminal(Vertex v) const { return is_terminal_[v] != 0; }

  // Incident edge ids of v.
  std::span<const EdgeId> incident(Vertex v) const {
    return {adj_edges_.data() + adj_offset_[v],
            adj_edges_.data() + adj_offset_[v + 1]};
  }
  int degree(Vertex v) const { return adj_offset_[v + 1] - adj_offset_[v]; }

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  // Edge ids ordered by (cost, id); shared by all Kruskal sweeps.
  const std::vector<EdgeId>& edges_by_cost() const { return edges_by_cost_; }

  // Largest value a single working cost may take so that no sum over edges
  // can overflow a signed 64-bit accumulator.
  Cost cost_cap() const { return cost_cap_; }

  // Arc helpers: arc 2e points u->v, arc 2e+1 points v->u.
  int arc_count() const { return 2 * edge_count(); }
  static EdgeId arc_edge(ArcId a) { return a >> 1; }
  Vertex arc_tail(ArcId a) const {
    const Edge& ed = edges_[a >> 1];
    return (a & 1) ? ed.v : ed.u;
  }
  Vertex arc_head(ArcId a) const {
    const Edge& ed = edges_[a >> 1];
    return (a & 1) ? ed.u : ed.v;
  }
  // The arc of edge e entering head.
  ArcId arc_into(EdgeId e, Vertex head) const { return 2 * e + (edges_[e].v == head ? 0 : 1); }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<Vertex> terminals_;
  std::vector<std::uint8_t> is_terminal_;
  std::vector<int> adj_offset_;
  std::vector<EdgeId> adj_edges_;
  std::vector<EdgeId> edges_by_cost_;
  Cost cost_cap_;
};

// SteinLib .stp reader. Vertex ids are remapped to 0-based. Throws ParseError
// with the offending line number on malformed input.
Instance parse_stp(std::istream& in);
Instance parse_stp_string(const std::string& text);
Instance parse_stp_file(const std::string& path);

// Writes the normalized instance back out as .stp (1-based ids).
void write_stp(std::ostream& out, const Instance& inst, const std::string& name = "instance");

}  // namespace steiner

#endif
