#pragma once

#include <optional>
#include <string>
#include <utility>

#include "subdiv/digraph.hpp"

namespace subdiv {

enum class Verdict { Tractable, NPComplete, Open };

struct Classification {
  Verdict verdict = Verdict::Tractable;
  std::string justification;
};

std::string to_string(Verdict v);
// "Tractable (symmetric star)" style line.
std::string to_string(const Classification& c);

struct NpCertificate {
  bool holds = false;
  std::optional<std::pair<Arc, Arc>> arcs;  // the two arcs ab, cd
};

// Sufficient NP-completeness conditions: a 2-cycle on two big vertices, or
// two arcs between big vertices whose endpoint swap changes the big-paths
// multidigraph up to isomorphism. Throws beyond 8 big vertices.
NpCertificate np_sufficient(const Digraph& f);

// Verdict for a 4-vertex pattern. Throws std::invalid_argument if n != 4.
Classification classify4(const Digraph& f);

}  // namespace subdiv
