#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subdiv/digraph.hpp"

namespace subdiv {

struct Pattern {
  std::string name;
  Digraph graph;
  std::map<std::string, Vertex> roles;
  // The two arcs the 2-linkage instance is put on (N_i only).
  std::optional<std::pair<Arc, Arc>> gadget_arcs;
};

// Fixed names (W2, E5, O3, ...) and parameterized ones: Wk, SSk, SSstark,
// Ck, gridk. Throws std::invalid_argument for unknown names.
Pattern registry_get(const std::string& name);
// The fixed-name entries only.
std::vector<std::string> registry_names();

Pattern wheel(int k);
Pattern symmetric_star(int k);
Pattern superstar(int k);
Pattern directed_cycle(int k);
Pattern cylindrical_grid(int k);

// Arc bitmask with bit 4u+v; canonical = minimum over vertex permutations.
std::uint16_t arc_mask(const Digraph& f);
Digraph from_mask(int n, std::uint16_t mask);
std::uint16_t canonical_mask(const Digraph& f);
// Class key up to isomorphism and converse.
std::uint16_t converse_class(const Digraph& f);

struct CanonicalForm {
  std::uint16_t mask = 0;
  std::optional<std::string> match;           // isomorphic registry entry
  std::optional<std::string> converse_match;  // entry isomorphic to converse
};
CanonicalForm canonical_form_4(const Digraph& f);

// Brute-force isomorphisms a -> b (perm[v] = image of v). Small digraphs only.
std::vector<std::vector<Vertex>> isomorphisms(const Digraph& a,
                                              const Digraph& b,
                                              bool first_only = false);
bool isomorphic(const Digraph& a, const Digraph& b);

// Spider: legs hang off the body; +len is an outgoing dipath, -len an
// incoming one. Vertex 0 of to_digraph() is the body.
struct Spider {
  std::vector<int> legs;

  int order() const;
  Digraph to_digraph() const;
};

struct SpiderMatch {
  Spider spider;
  Vertex body = -1;
};
std::optional<SpiderMatch> as_spider(const Digraph& f);

}  // namespace subdiv
