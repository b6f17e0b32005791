#include "subdiv/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subdiv/patterns.hpp"

namespace subdiv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Tractable:
      return "Tractable";
    case Verdict::NPComplete:
      return "NPComplete";
    case Verdict::Open:
      return "Open";
  }
  return "?";
}

std::string to_string(const Classification& c) {
  return to_string(c.verdict) + " (" + c.justification + ")";
}

namespace {

using Counts = std::vector<std::vector<int>>;

Counts count_matrix(const std::vector<Arc>& arcs, const VertexSet& verts) {
  const int b = static_cast<int>(verts.size());
  Counts c(b, std::vector<int>(b, 0));
  auto idx = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  for (auto [u, v] : arcs) ++c[idx(u)][idx(v)];
  return c;
}

bool multigraph_isomorphic(const Counts& a, const Counts& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u)
      for (int v = 0; v < n && same; ++v) same = a[u][v] == b[p[u]][p[v]];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

NpCertificate np_sufficient(const Digraph& f) {
  NpCertificate cert;
  for (auto [u, v] : two_cycle_graph(f))
    if (is_big(f, u) && is_big(f, v)) {
      cert.holds = true;
      cert.arcs = std::make_pair(Arc{u, v}, Arc{v, u});
      return cert;
    }
  const auto bp = big_paths_digraph(f);
  if (bp.vertices.size() < 2) return cert;
  if (bp.vertices.size() > 8)
    throw std::invalid_argument("np_sufficient: more than 8 big vertices");
  const Counts base = count_matrix(bp.arcs, bp.vertices);
  std::vector<Arc> candidates;
  for (auto [u, v] : f.arcs())
    if (is_big(f, u) && is_big(f, v)) candidates.emplace_back(u, v);
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      auto [a, b] = candidates[i];
      auto [c, d] = candidates[j];
      std::vector<Arc> swapped = bp.arcs;
      swapped.erase(std::find(swapped.begin(), swapped.end(), Arc{a, b}));
      swapped.erase(std::find(swapped.begin(), swapped.end(), Arc{c, d}));
      swapped.emplace_back(a, d);
      swapped.emplace_back(c, b);
      if (!multigraph_isomorphic(base, count_matrix(swapped, bp.vertices))) {
        cert.holds = true;
        cert.arcs = std::make_pair(candidates[i], candidates[j]);
        return cert;
      }
    }
  return cert;
}

namespace {

// Registry name in the given family ('E', 'N', 'O') matching f or its
// converse, e.g. "E4" or "E4 converse".
std::optional<std::string> family(const CanonicalForm& cf, char letter) {
  auto in_family = [&](const std::optional<std::string>& m) {
    return m && m->size() == 2 && (*m)[0] == letter;
  };
  if (in_family(cf.match)) return *cf.match;
  if (in_family(cf.converse_match)) return *cf.converse_match + " converse";
  return std::nullopt;
}

std::optional<std::string> named(const CanonicalForm& cf,
                                 std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (cf.match == n) return std::string(n);
    if (cf.converse_match == n) return std::string(n) + " converse";
  }
  return std::nullopt;
}

Classification tractable(std::string why) {
  return {Verdict::Tractable, std::move(why)};
}

[[noreturn]] void unclassified(const std::string& where) {
  throw std::logic_error("classify4: no rule for pattern in " + where);
}

}  // namespace

Classification classify4(const Digraph& f) {
  if (f.order() != 4) throw std::invalid_argument("classify4 needs 4 vertices");
  const auto edges = two_cycle_graph(f);
  for (auto [u, v] : edges)
    if (is_big(f, u) && is_big(f, v))
      return {Verdict::NPComplete, "big 2-cycle"};

  const CanonicalForm cf = canonical_form_4(f);
  const auto n_name = family(cf, 'N');
  const auto o_name = family(cf, 'O');
  const auto e_name = family(cf, 'E');
  auto np = [&] {
    return Classification{Verdict::NPComplete,
                          *n_name + ", 2-linkage gadget"};
  };
  auto open = [&] { return Classification{Verdict::Open, *o_name}; };

  int a_prime = 0;
  for (auto [u, v] : f.arcs())
    if (!f.has_arc(v, u)) ++a_prime;
  const bool has_big = !big_vertices(f).empty();

  if (edges.empty()) {
    if (!has_big) return tractable("oriented, no big vertex");
    if (auto s = named(cf, {"W3"})) return tractable("oriented: " + *s + " via tripods");
    if (auto s = named(cf, {"Z4"})) return tractable("oriented: " + *s);
    if (auto s = named(cf, {"TT4", "S122", "F3"}))
      return tractable("oriented: " + *s + ", known algorithm");
    if (as_spider(f)) return tractable("oriented: spider");
    return tractable("oriented graph of order 4");
  }

  if (edges.size() == 3) {
    // The three edges form a star, so F is SS3 or SS3 plus a leaf arc.
    return tractable(a_prime == 0 ? "symmetric star" : "superstar");
  }

  if (edges.size() == 2) {
    const bool adjacent =
        edges[0].first == edges[1].first || edges[0].first == edges[1].second ||
        edges[0].second == edges[1].first ||
        edges[0].second == edges[1].second;
    if (!adjacent) {
      if (a_prime <= 1 || !has_big) return tractable("no big vertex");
      if (n_name) return np();
      if (o_name) return open();
      unclassified("two disjoint 2-cycles");
    }
    if (a_prime == 0) return tractable("symmetric star plus isolated vertex");
    if (a_prime == 1) {
      if (e_name) return tractable(*e_name);
      bool isolated = false;
      for (Vertex v = 0; v < 4; ++v)
        isolated |= f.in_degree(v) + f.out_degree(v) == 0;
      if (isolated) return tractable("superstar plus isolated vertex");
      return tractable("symmetric star with an arc glued at its centre");
    }
    if (a_prime == 2) {
      if (e_name) return tractable(*e_name);
      if (o_name) return open();
      return tractable("superstar with an arc glued at its centre");
    }
    if (n_name) return np();
    if (o_name) return open();
    unclassified("two adjacent 2-cycles");
  }

  // Exactly one 2-cycle.
  if (!has_big) return tractable("no big vertex");
  if (a_prime == 2) return tractable("2-cycle with a glued spider");
  if (a_prime == 3) {
    std::vector<Arc> rest;
    for (auto [u, v] : f.arcs())
      if (!f.has_arc(v, u)) rest.emplace_back(u, v);
    std::vector<int> touch(4, 0);
    for (auto [u, v] : rest) ++touch[u], ++touch[v];
    if (std::count(touch.begin(), touch.end(), 3) == 1)
      return tractable("W2 with an arc glued at its centre");
    if (std::count(touch.begin(), touch.end(), 2) == 3) {
      std::vector<int> outs(4, 0);
      for (auto [u, v] : rest) ++outs[u];
      bool directed = true;
      for (Vertex v = 0; v < 4; ++v)
        if (touch[v] == 2 && outs[v] != 1) directed = false;
      if (directed) return tractable("windmill");
      if (e_name) return tractable(*e_name);
      if (n_name) return np();
      unclassified("2-cycle plus triangle");
    }
    return tractable("W2 or bispindle B(2,1;1) with a glued arc");
  }
  if (a_prime == 4) {
    if (n_name) return np();
    if (o_name) return open();
    if (e_name) return tractable(*e_name);
  }
  unclassified("one 2-cycle");
}

}  // namespace subdiv
