#pragma once

#include <array>
#include <optional>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

using Triple = std::array<Vertex, 3>;

// A directed cycle (cycle[i] -> cycle[i+1 mod len]) plus three disjoint
// legs; legs[i] starts at the i-th X vertex and ends on the cycle.
struct Tripod {
  std::vector<Vertex> cycle;
  std::array<DiPath, 3> legs;
};

bool validate_tripod(const Digraph& d, const Triple& x, const Tripod& t,
                     bool unfolded = false);

// Cuts every leg at its first cycle vertex. Legs are disjoint, so the cut
// legs avoid the other X vertices and the result is unfolded.
Tripod unfold_tripod(const Digraph& d, const Tripod& t);

// X-tripod in a strong digraph, or none. Throws std::invalid_argument if d
// is not strong or X has repeated vertices.
std::optional<Tripod> tripod(const Digraph& d, const Triple& x);

// Some directed cycle of length >= 3, found arc by arc.
std::optional<std::vector<Vertex>> long_cycle(const Digraph& d,
                                              const VertexMask& mask = {});

}  // namespace subdiv
