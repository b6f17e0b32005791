#include "subdiv/gadgets.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "subdiv/generate.hpp"
#include "subdiv/patterns.hpp"

namespace subdiv {

std::string instance_problem(const LinkageInstance& inst) {
  const Digraph& d = inst.d;
  const Vertex t[4] = {inst.x1, inst.x2, inst.y1, inst.y2};
  for (Vertex v : t)
    if (v < 0 || v >= d.order()) return "terminal out of range";
  if (std::set<Vertex>(t, t + 4).size() != 4) return "terminals not distinct";
  if (d.in_degree(inst.x1) || d.in_degree(inst.x2)) return "x1 and x2 must be sources";
  if (d.out_degree(inst.y1) || d.out_degree(inst.y2)) return "y1 and y2 must be sinks";
  for (Vertex v = 0; v < d.order(); ++v)
    if (is_big(d, v)) return "vertex " + std::to_string(v) + " is big";
  return "";
}

Digraph put_on_arcs(const Digraph& f, Arc e1, Arc e2, const LinkageInstance& inst) {
  if (e1 == e2) throw std::invalid_argument("the two arcs must differ");
  if (!f.has_arc(e1.first, e1.second) || !f.has_arc(e2.first, e2.second))
    throw std::invalid_argument("arc not in pattern");
  if (auto why = instance_problem(inst); !why.empty())
    throw std::invalid_argument("invalid linkage instance: " + why);
  const int s = f.order();
  Digraph g(s + inst.d.order());
  for (auto [u, v] : f.arcs())
    if (Arc{u, v} != e1 && Arc{u, v} != e2) g.add_arc(u, v);
  for (auto [u, v] : inst.d.arcs()) g.add_arc(u + s, v + s);
  g.add_arc(e1.first, inst.x1 + s);
  g.add_arc(inst.y1 + s, e1.second);
  g.add_arc(e2.first, inst.x2 + s);
  g.add_arc(inst.y2 + s, e2.second);
  return g;
}

GadgetReport gadget_equivalence_check(int i, const LinkageInstance& inst,
                                      const OracleBudget& budget) {
  if (i < 1 || i > 9) throw std::invalid_argument("gadget index must be in 1..9");
  const Pattern p = registry_get("N" + std::to_string(i));
  const Digraph g = put_on_arcs(p.graph, p.gadget_arcs->first, p.gadget_arcs->second, inst);
  auto link = brute_force_2_linkage(inst.d, inst.x1, inst.x2, inst.y1, inst.y2, budget);
  if (link.status == OracleStatus::BudgetExceeded) throw BudgetError("linkage search exceeded its budget");
  auto sub = brute_force_subdivision(p.graph, g, budget);
  if (sub.exceeded()) throw BudgetError("subdivision search exceeded its budget");
  GadgetReport r;
  r.linkage = link.status == OracleStatus::Found;
  r.subdivision = sub.found();
  r.agree = r.linkage == r.subdivision;
  return r;
}

LinkageInstance random_linkage_instance(int n, double p, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("a linkage instance needs at least 4 vertices");
  if (p < 0 || p > 1) throw std::invalid_argument("arc probability must be in [0,1]");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    LinkageInstance inst;
    inst.d = Digraph(n);
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && u != 2 && u != 3 && v != 0 && v != 1) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), gen);
    auto room = [&](Vertex v, int din, int dout) {
      const int i = inst.d.in_degree(v) + din, o = inst.d.out_degree(v) + dout;
      return i <= 2 && o <= 2 && i + o <= 3;
    };
    for (auto [u, v] : pairs)
      if (coin(gen(), p) && room(u, 0, 1) && room(v, 1, 0)) inst.d.add_arc(u, v);
    if (validate_instance(inst)) return inst;
  }
  throw std::runtime_error("could not generate a valid linkage instance");
}

}  // namespace subdiv
