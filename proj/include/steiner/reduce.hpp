#ifndef STEINER_REDUCE_HPP
#define STEINER_REDUCE_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steiner/instance.hpp"
#include "steiner/tree.hpp"

namespace steiner {

enum class ReduceMode { kFull, kEdgeRemovalOnly };

// Ordered log of reduction events plus the mapping from reduced edge ids to
// the original edges they stand for; enough to lift any reduced-instance
// solution back to the original graph (and to replay the reduction in tests).
struct ReductionTrace {
  struct Event {
    enum class Kind { kDeleteVertex, kDeleteEdge, kContract };
    Kind kind;
    Vertex v = kNoVertex;          // deleted or contracted-away vertex
    Vertex u = kNoVertex, w = kNoVertex;  // contract: surviving endpoints
    std::vector<EdgeId> original;  // original edges involved
  };
  std::vector<Event> events;
  // reduced edge id -> original edge ids it expands to (singleton unless
  // contractions merged a path)
  std::vector<std::vector<EdgeId>> edge_origin;

  void write_sidecar(std::ostream& out) const;
};

struct ReducedInstance {
  std::unique_ptr<Instance> instance;
  ReductionTrace trace;
};

// Applies, to a fixpoint (bounded rounds), in rotation: degree-1 deletion,
// degree-2 path contraction (skipped in edge-removal-only mode), the local
// bottleneck test, and the Voronoi/union-find bottleneck test. The optimum is
// preserved exactly. Vertex ids are never remapped (removed vertices simply
// become isolated), so edge-removal-only traces contain no contract events.
ReducedInstance preprocess(const Instance& inst, ReduceMode mode = ReduceMode::kFull);

// Expands contracted edges back to original ones; identical cost.
SteinerTree lift(const Instance& original, const ReductionTrace& trace,
                 const SteinerTree& reduced_tree);

}  // namespace steiner

#endif
