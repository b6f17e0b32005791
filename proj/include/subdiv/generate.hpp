#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

// Seeded random digraph: each ordered pair becomes an arc with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

// One representative per isomorphism class of digraphs on n <= 5 vertices.
std::vector<Digraph> digraph_classes(int n);

// Calls f on every labelled digraph on n <= 4 vertices.
void for_each_labelled(int n, const std::function<void(const Digraph&)>& f);

// Deterministic coin with probability p from a 64-bit generator word.
inline bool coin(std::uint64_t word, double p) {
  return static_cast<double>(word >> 11) * 0x1.0p-53 < p;
}

}  // namespace subdiv
