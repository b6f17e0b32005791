#pragma once

#include <optional>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

// Either k+1 paths or a k-separation, never both.
struct MengerOutcome {
  std::vector<DiPath> paths;
  std::optional<Separation> separation;

  bool linked() const { return !separation.has_value(); }
};

struct HandleSpec {
  Vertex hub = -1;
  std::vector<std::pair<Vertex, int>> targets;  // (y_i, k_i)
};

struct HandlesOutcome {
  std::vector<DiPath> handles;  // grouped by target, in spec order
  bool found = false;
};

// All functions look only at alive vertices of `mask` and ask for k+1
// paths; a failure carries a k-separation of the alive subdigraph.
MengerOutcome internally_disjoint(const Digraph& d, Vertex x, Vertex y, int k,
                                  const VertexMask& mask = {});
MengerOutcome disjoint_set_to_set(const Digraph& d, const VertexSet& x,
                                  const VertexSet& y, int k,
                                  const VertexMask& mask = {});
MengerOutcome independent_from(const Digraph& d, Vertex x, const VertexSet& y,
                               int k, const VertexMask& mask = {});
MengerOutcome independent_to(const Digraph& d, const VertexSet& x, Vertex y,
                             int k, const VertexMask& mask = {});

HandlesOutcome handles(const Digraph& d, const HandleSpec& spec,
                       const VertexMask& mask = {});
bool validate_handles(const Digraph& d, const HandleSpec& spec,
                      const std::vector<DiPath>& hs);

// Internally disjoint paths with distinct initial vertices in X and
// targets[i].second of them ending at targets[i].first. X must avoid the
// targets. Paths are grouped by target in spec order.
std::optional<std::vector<DiPath>> set_to_targets(
    const Digraph& d, const VertexSet& x,
    const std::vector<std::pair<Vertex, int>>& targets,
    const VertexMask& mask = {});

}  // namespace subdiv
