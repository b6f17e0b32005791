#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "subdiv/digraph.hpp"
#include "subdiv/gadgets.hpp"

namespace subdiv {

// Message starts with "line N:" when a line is to blame.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n m", then m lines "u v". Loops, duplicates and bad ids are rejected.
Digraph parse_edge_list(std::istream& in);
std::string format_edge_list(const Digraph& d);

// Edge list followed by "terminals x1 x2 y1 y2".
LinkageInstance parse_instance(std::istream& in);
std::string format_instance(const LinkageInstance& inst);

// "branch a -> v" per F-vertex, then "path a b: v0 v1 ..." per F-arc in
// arc order.
std::string format_witness(const Digraph& f, const SubdivisionWitness& w);
SubdivisionWitness parse_witness(std::istream& in, const Digraph& f);

Digraph read_edge_list_file(const std::string& path);
LinkageInstance read_instance_file(const std::string& path);

}  // namespace subdiv
