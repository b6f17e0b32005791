#include "subdiv/dispatch.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "subdiv/classify.hpp"
#include "subdiv/patterns.hpp"
#include "subdiv/tripod.hpp"

namespace subdiv {

namespace {

std::vector<VertexSet> weak_components(const Digraph& f, const VertexMask& mask = {}) {
  const int n = f.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0 || !alive(mask, s)) continue;
    VertexSet c{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < c.size(); ++i)
      for (const auto* nb : {&f.out(c[i]), &f.in(c[i])})
        for (Vertex w : *nb)
          if (comp[w] < 0 && alive(mask, w)) {
            comp[w] = comp[s];
            c.push_back(w);
          }
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

// h as a spider whose body is u; legs must meet only at u.
std::optional<Spider> spider_at(const Digraph& h, Vertex u) {
  const int n = h.order();
  if (h.size() != n - 1) return std::nullopt;
  std::vector<VertexSet> nb(n);
  for (auto [a, b] : h.arcs()) {
    if (h.has_arc(b, a)) return std::nullopt;
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  Spider s;
  int seen = 1;
  for (Vertex first : nb[u]) {
    const bool outward = h.has_arc(u, first);
    Vertex prev = u, cur = first;
    int len = 1;
    while (true) {
      ++seen;
      if (nb[cur].size() > 2) return std::nullopt;
      Vertex next = -1;
      for (Vertex w : nb[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      if (next == u || outward != h.has_arc(cur, next)) return std::nullopt;
      prev = cur;
      cur = next;
      ++len;
    }
    s.legs.push_back(outward ? len : -len);
  }
  if (seen != n) return std::nullopt;
  std::sort(s.legs.begin(), s.legs.end());
  return s;
}

Decider on_converse(Decider inner) {
  return [inner](const Digraph& d) { return inner(converse(d)); };
}

RootedDecider on_converse(RootedDecider inner) {
  return [inner](const Digraph& d, Vertex v) { return inner(converse(d), v); };
}

bool any_vertex(const Digraph& d, const std::function<bool(Vertex)>& p) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (p(v)) return true;
  return false;
}

struct Named {
  std::string name;
  Digraph graph;
  Decider decide;
};

std::vector<Named> named_patterns(int n) {
  std::vector<Named> ps;
  auto add = [&](std::string name, Digraph g, Decider dec) {
    if (g.order() == n) ps.push_back({std::move(name), std::move(g), std::move(dec)});
  };
  add("C2", directed_cycle(2).graph, [](const Digraph& d) {
    return any_vertex(d, [&](Vertex v) { return detect_cycle_through(d, v); });
  });
  add("C3", directed_cycle(3).graph, [](const Digraph& d) { return long_cycle(d).has_value(); });
  add("W2", wheel(2).graph, detect_w2);
  add("W3", wheel(3).graph, detect_w3);
  add("Z4", registry_get("Z4").graph, detect_z4);
  for (int i = 1; i <= 8; ++i)
    add("E" + std::to_string(i), registry_get("E" + std::to_string(i)).graph,
        [i](const Digraph& d) { return detect_ei(i, d); });
  add("E9", registry_get("E9").graph, detect_e9);
  if (n >= 3) {
    const int k = n - 1;
    add("SS" + std::to_string(k), symmetric_star(k).graph, [k](const Digraph& d) {
      return any_vertex(d, [&](Vertex v) { return detect_symmetric_star(d, v, k); });
    });
    add("SS*" + std::to_string(k), superstar(k).graph, [k](const Digraph& d) {
      return any_vertex(d, [&](Vertex v) { return detect_superstar(d, v, k); });
    });
  }
  return ps;
}

struct RootedNamed {
  std::string name;
  Digraph graph;
  Vertex role;
  RootedDecider decide;
};

std::vector<RootedNamed> rooted_patterns(int n) {
  std::vector<RootedNamed> ps;
  auto add = [&](std::string name, Digraph g, Vertex role, RootedDecider dec) {
    if (g.order() == n) ps.push_back({std::move(name), std::move(g), role, std::move(dec)});
  };
  add("C2 vertex", directed_cycle(2).graph, 0, detect_cycle_through);
  auto w2_centre = [](const Digraph& d, Vertex c) {
    return any_vertex(d, [&](Vertex b) { return b != c && detect_w2_forced(d, b, c); });
  };
  auto w2_rim = [](const Digraph& d, Vertex b) {
    return any_vertex(d, [&](Vertex c) { return b != c && detect_w2_forced(d, b, c); });
  };
  add("W2 centre", wheel(2).graph, 2, w2_centre);
  add("W2 rim", wheel(2).graph, 1, w2_rim);
  if (n >= 3) {
    const int k = n - 1;
    add("SS" + std::to_string(k) + " centre", symmetric_star(k).graph, 0,
        [k](const Digraph& d, Vertex v) { return detect_symmetric_star(d, v, k); });
    add("SS*" + std::to_string(k) + " centre", superstar(k).graph, 0,
        [k](const Digraph& d, Vertex v) { return detect_superstar(d, v, k); });
  }
  return ps;
}

std::string spider_text(const Spider& t) {
  std::string s = "spider(";
  for (size_t i = 0; i < t.legs.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.legs[i]);
  return s + ")";
}

VertexSet others(int n, const VertexSet& removed) {
  VertexSet keep;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) keep.push_back(v);
  return keep;
}

std::optional<Route> glued_route(const Digraph& f) {
  const int n = f.order();
  for (Vertex u = 0; u < n; ++u) {
    auto comps = weak_components(f, mask_without(n, {u}));
    const int c = static_cast<int>(comps.size());
    for (int bits = 1; bits < (1 << c); ++bits) {
      VertexSet legs;
      for (int i = 0; i < c; ++i)
        if (bits >> i & 1) legs.insert(legs.end(), comps[i].begin(), comps[i].end());
      std::sort(legs.begin(), legs.end());
      if (static_cast<int>(legs.size()) == n - 1) continue;  // whole F is a spider
      VertexSet with_u = legs;
      with_u.insert(std::upper_bound(with_u.begin(), with_u.end(), u), u);
      auto t_sub = induced_subdigraph(f, with_u);
      auto t = spider_at(t_sub.graph, t_sub.from_host[u]);
      if (!t) continue;
      auto rest = induced_subdigraph(f, others(n, legs));
      auto inner = rooted_route_for(rest.graph, rest.from_host[u]);
      if (!inner) continue;
      Spider spider = *t;
      RootedDecider at = inner->decide;
      return Route{[spider, at](const Digraph& d) { return detect_glue_spider(spider, d, at); },
                   spider_text(spider) + " glued to " + inner->method};
    }
  }
  return std::nullopt;
}

std::optional<Route> union_route(const Digraph& f) {
  const int n = f.order();
  auto comps = weak_components(f);
  if (comps.size() < 2) return std::nullopt;
  for (const VertexSet& comp : comps) {
    auto sub = induced_subdigraph(f, comp);
    auto m = as_spider(sub.graph);
    if (!m) continue;
    auto rest = induced_subdigraph(f, others(n, comp));
    auto inner = route_for(rest.graph);
    if (!inner) continue;
    Spider spider = m->spider;
    Decider dec = inner->decide;
    const int order = rest.graph.order();
    return Route{[spider, dec, order](const Digraph& d) {
                   return detect_union_spider(order, spider, d, dec);
                 },
                 inner->method + " plus disjoint " + spider_text(spider)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Route> route_for(const Digraph& f) {
  const int n = f.order();
  if (n == 0) return Route{[](const Digraph&) { return true; }, "empty pattern"};
  if (f.size() == 0)
    return Route{[n](const Digraph& d) { return d.order() >= n; }, "arcless pattern"};
  if (auto m = as_spider(f)) {
    Spider t = m->spider;
    return Route{[t](const Digraph& d) { return detect_spider(t, d); }, spider_text(t) + " search"};
  }
  const Digraph fc = converse(f);
  for (const Named& p : named_patterns(n)) {
    if (p.graph.size() != f.size()) continue;
    if (isomorphic(f, p.graph)) return Route{p.decide, p.name + " detector"};
    if (isomorphic(fc, p.graph))
      return Route{on_converse(p.decide), p.name + " detector on the converse"};
  }
  if (auto r = union_route(f)) return r;
  return glued_route(f);
}

std::optional<RootedRoute> rooted_route_for(const Digraph& f, Vertex u) {
  const int n = f.order();
  if (n == 1) return RootedRoute{[](const Digraph&, Vertex) { return true; }, "single vertex"};
  const Digraph fc = converse(f);
  for (const RootedNamed& p : rooted_patterns(n)) {
    if (p.graph.size() != f.size()) continue;
    for (const auto& perm : isomorphisms(f, p.graph))
      if (perm[u] == p.role) return RootedRoute{p.decide, p.name};
    for (const auto& perm : isomorphisms(fc, p.graph))
      if (perm[u] == p.role) return RootedRoute{on_converse(p.decide), p.name + " (converse)"};
  }
  return std::nullopt;
}

DispatchResult dispatch_detect(const Digraph& f, const Digraph& d, const DispatchOptions& opt) {
  DispatchResult res;
  if (auto r = route_for(f)) {
    res.method = r->method;
    if (opt.want_witness) {
      res.witness = find_subdivision(f, d, r->decide);
      res.status = res.witness ? OracleStatus::Found : OracleStatus::NotFound;
    } else {
      res.status = r->decide(d) ? OracleStatus::Found : OracleStatus::NotFound;
    }
    return res;
  }
  bool automatic = false;
  std::string refusal;
  if (f.order() == 4) {
    Classification c = classify4(f);
    if (c.verdict == Verdict::Tractable)
      automatic = true;
    else if (c.verdict == Verdict::NPComplete)
      refusal = "pattern is NP-complete (" + c.justification + "); use --oracle";
    else
      refusal = "complexity of pattern is open (" + c.justification + "); use --oracle";
  } else {
    bool np = false;
    try {
      np = np_sufficient(f).holds;
    } catch (const std::invalid_argument&) {
    }
    refusal = np ? "pattern is NP-complete; use --oracle"
                 : "no polynomial detector for this pattern; use --oracle";
  }
  if (!automatic && !opt.allow_oracle) throw DispatchError(refusal);
  auto o = brute_force_subdivision(f, d, opt.budget);
  res.status = o.status;
  res.method = "exhaustive search";
  res.desk_scale = true;
  if (opt.want_witness) res.witness = o.witness;
  return res;
}

}  // namespace subdiv
