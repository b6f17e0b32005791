#pragma once

#include <optional>

#include "subdiv/digraph.hpp"

namespace subdiv {

// R has length >= 2, runs from P to Q; P, Q and the interior of R are
// pairwise disjoint. P or Q may have length 0.
struct Shunt {
  DiPath P, Q, R;
};

// With S and T given, also checks {s(P),s(Q)} = S and {t(P),t(Q)} = T.
bool validate_shunt(const Digraph& d, const Shunt& s, const VertexSet& S = {},
                    const VertexSet& T = {});

// ({s1,s2},{t1,t2})-shunt or none. Throws std::invalid_argument unless the
// four vertices are distinct.
std::optional<Shunt> shunt(const Digraph& d, Vertex s1, Vertex s2, Vertex t1,
                           Vertex t2);

}  // namespace subdiv
