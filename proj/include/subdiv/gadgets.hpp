#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "subdiv/digraph.hpp"
#include "subdiv/oracle.hpp"

namespace subdiv {

// Restricted 2-linkage input: no big vertices, x's are sources, y's sinks.
struct LinkageInstance {
  Digraph d;
  Vertex x1 = 0, x2 = 1, y1 = 2, y2 = 3;
};

// Empty string when valid, otherwise the first violated condition.
std::string instance_problem(const LinkageInstance& inst);
inline bool validate_instance(const LinkageInstance& inst) {
  return instance_problem(inst).empty();
}

// F minus e1, e2 plus a shifted copy of inst.d, joined by u1->x1, y1->v1,
// u2->x2, y2->v2. F keeps ids 0..|F|-1.
Digraph put_on_arcs(const Digraph& f, Arc e1, Arc e2, const LinkageInstance& inst);

struct GadgetReport {
  bool linkage = false;
  bool subdivision = false;
  bool agree = false;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Oracles on inst and on N_i put on its two registry arcs. Throws
// BudgetError when either oracle runs out, std::invalid_argument for a bad
// i or instance.
GadgetReport gadget_equivalence_check(int i, const LinkageInstance& inst,
                                      const OracleBudget& budget = {});

// Terminals are 0..3. Every vertex keeps in- and out-degree <= 2 and total
// degree <= 3, so no vertex is big.
LinkageInstance random_linkage_instance(int n, double p, std::uint64_t seed);

}  // namespace subdiv
