#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "subdiv/detectors.hpp"
#include "subdiv/oracle.hpp"

namespace subdiv {

struct Route {
  Decider decide;
  std::string method;  // e.g. "W3 detector", "spider glued to SS2 centre"
};

struct RootedRoute {
  RootedDecider decide;
  std::string method;
};

// A polynomial decision procedure for F-subdivision, if one is built.
std::optional<Route> route_for(const Digraph& f);
// The same with the image of F-vertex u prescribed.
std::optional<RootedRoute> rooted_route_for(const Digraph& f, Vertex u);

struct DispatchOptions {
  bool allow_oracle = false;
  bool want_witness = false;
  OracleBudget budget{};
};

struct DispatchResult {
  OracleStatus status = OracleStatus::NotFound;
  std::string method;
  bool desk_scale = false;  // answered by the exponential oracle
  std::optional<SubdivisionWitness> witness;

  bool found() const { return status == OracleStatus::Found; }
};

// Raised when the pattern has no detector and the oracle is not allowed.
class DispatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Detector when one exists. Otherwise 4-vertex tractable patterns fall back
// to the oracle on their own; everything else needs allow_oracle.
DispatchResult dispatch_detect(const Digraph& f, const Digraph& d,
                               const DispatchOptions& opt = {});

}  // namespace subdiv
