#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

struct OracleBudget {
  int max_n = 10;
  std::int64_t max_steps = 10'000'000;
};

enum class OracleStatus { Found, NotFound, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::NotFound;
  std::optional<SubdivisionWitness> witness;
  std::int64_t steps = 0;

  bool found() const { return status == OracleStatus::Found; }
  bool exceeded() const { return status == OracleStatus::BudgetExceeded; }
};

// pinned[a] >= 0 forces F-vertex a onto that host vertex; empty = no pins.
OracleResult brute_force_subdivision(const Digraph& f, const Digraph& d,
                                     const OracleBudget& budget = {},
                                     const std::vector<Vertex>& pinned = {});

// candidates[a] lists the host vertices F-vertex a may map to.
OracleResult brute_force_subdivision_among(
    const Digraph& f, const Digraph& d, const OracleBudget& budget,
    const std::vector<std::vector<Vertex>>& candidates);

struct LinkageResult {
  OracleStatus status = OracleStatus::NotFound;
  std::optional<std::pair<DiPath, DiPath>> paths;
};

LinkageResult brute_force_2_linkage(const Digraph& d, Vertex x1, Vertex x2,
                                    Vertex y1, Vertex y2,
                                    const OracleBudget& budget = {});

}  // namespace subdiv
