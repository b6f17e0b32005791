#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "subdiv/digraph.hpp"
#include "subdiv/patterns.hpp"

namespace subdiv {

using Decider = std::function<bool(const Digraph&)>;
// Decides F-subdivision with a prescribed host vertex for one role of F.
using RootedDecider = std::function<bool(const Digraph&, Vertex)>;

// Arc-deletion loop over d, then witness extraction from the surviving
// subdivision. Throws std::logic_error if `decide` contradicts itself.
std::optional<SubdivisionWitness> find_subdivision(const Digraph& f,
                                                   const Digraph& d,
                                                   const Decider& decide);

bool detect_w3(const Digraph& d);
bool detect_z4(const Digraph& d);

// W2 (rim a<->b, centre c) with b-vertex b and c-vertex c.
bool detect_w2_forced(const Digraph& d, Vertex b, Vertex c);
bool detect_w2(const Digraph& d);

// Copies of t with the given body; visit gets the non-body vertices and
// returns true to stop. Returns true iff some visit returned true.
bool for_each_spider_copy(const Spider& t, const Digraph& d, Vertex body,
                          const std::function<bool(const VertexSet&)>& visit);
bool detect_spider(const Spider& t, const Digraph& d);

// F + T for a spider T, given a decider for F of order f_order.
bool detect_union_spider(int f_order, const Spider& t, const Digraph& d,
                         const Decider& decide_f);
// T glued at the role vertex u of F; decide_f_at fixes the u-vertex.
bool detect_glue_spider(const Spider& t, const Digraph& d,
                        const RootedDecider& decide_f_at);

bool detect_cycle_through(const Digraph& d, Vertex v);
bool detect_symmetric_star(const Digraph& d, Vertex v, int k);
bool detect_superstar(const Digraph& d, Vertex v, int k);

// E1..E8; throws std::invalid_argument otherwise.
bool detect_ei(int i, const Digraph& d);
// E7 with the arc ab subdivided; also E8 with ab subdivided.
bool detect_g7(const Digraph& d);
bool detect_e9(const Digraph& d);

}  // namespace subdiv
