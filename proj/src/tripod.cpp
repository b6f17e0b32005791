#include "subdiv/tripod.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "subdiv/menger.hpp"

namespace subdiv {

bool validate_tripod(const Digraph& d, const Triple& x, const Tripod& t,
                     bool unfolded) {
  const int n = d.order();
  const auto& c = t.cycle;
  if (c.size() < 3) return false;
  std::vector<int> on_cycle(n, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    Vertex v = c[i];
    if (v < 0 || v >= n || on_cycle[v]) return false;
    on_cycle[v] = 1;
    if (!d.has_arc(v, c[(i + 1) % c.size()])) return false;
  }
  std::vector<char> used(n, 0);
  for (int i = 0; i < 3; ++i) {
    const DiPath& p = t.legs[i];
    if (!is_dipath(d, p) || p.source() != x[i] || !on_cycle[p.target()])
      return false;
    for (Vertex v : p.vertices) {
      if (used[v]) return false;
      used[v] = 1;
    }
    if (unfolded)
      for (int j = 0; j < p.length(); ++j)
        if (on_cycle[p.vertices[j]]) return false;
  }
  return true;
}

Tripod unfold_tripod(const Digraph& d, const Tripod& t) {
  Triple x{t.legs[0].source(), t.legs[1].source(), t.legs[2].source()};
  if (!validate_tripod(d, x, t)) throw std::invalid_argument("invalid tripod");
  std::vector<char> on_cycle(d.order(), 0);
  for (Vertex v : t.cycle) on_cycle[v] = 1;
  Tripod u = t;
  for (auto& leg : u.legs) {
    size_t j = 0;
    while (!on_cycle[leg.vertices[j]]) ++j;
    leg.vertices.resize(j + 1);
  }
  return u;
}

std::optional<std::vector<Vertex>> long_cycle(const Digraph& d,
                                              const VertexMask& mask) {
  for (auto [u, v] : d.arcs()) {
    if (!alive(mask, u) || !alive(mask, v)) continue;
    // A (v,u)-dipath other than the arc vu closes a cycle of length >= 3.
    VertexMask m = mask.empty() ? VertexMask(d.order(), 1) : mask;
    std::optional<DiPath> back;
    if (d.has_arc(v, u)) {
      Digraph without = d;
      without.remove_arc(v, u);
      back = bfs_path(without, {v}, {u}, m);
    } else {
      back = bfs_path(d, {v}, {u}, m);
    }
    if (back) {
      std::vector<Vertex> cyc{u};
      cyc.insert(cyc.end(), back->vertices.begin(), back->vertices.end() - 1);
      return cyc;
    }
  }
  return std::nullopt;
}

namespace {

// Replaces every consecutive pair (a,b) that is not an arc of `host` by
// expand(a,b), an (a,b)-dipath in host.
std::vector<Vertex> splice(const Digraph& host, const std::vector<Vertex>& seq,
                           bool closed,
                           const std::function<DiPath(Vertex, Vertex)>& expand) {
  std::vector<Vertex> out;
  const size_t len = seq.size();
  for (size_t i = 0; i < len; ++i) {
    out.push_back(seq[i]);
    if (!closed && i + 1 == len) break;
    Vertex a = seq[i], b = seq[(i + 1) % len];
    if (host.has_arc(a, b)) continue;
    DiPath q = expand(a, b);
    out.insert(out.end(), q.vertices.begin() + 1, q.vertices.end() - 1);
  }
  return out;
}

Tripod lift(const Digraph& host, const Triple& x, const Tripod& child,
            const std::vector<Vertex>& to_host,
            const std::function<DiPath(Vertex, Vertex)>& expand) {
  Tripod t;
  for (Vertex v : child.cycle) t.cycle.push_back(to_host[v]);
  t.cycle = splice(host, t.cycle, true, expand);
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> leg;
    for (Vertex v : child.legs[i].vertices) leg.push_back(to_host[v]);
    t.legs[i].vertices = splice(host, leg, false, expand);
  }
  if (!validate_tripod(host, x, t))
    throw std::logic_error("tripod: lifted certificate is invalid");
  return t;
}

Tripod from_paths(const std::vector<Vertex>& cycle,
                  const std::vector<DiPath>& paths, const Triple& x) {
  Tripod t;
  t.cycle = cycle;
  for (const auto& p : paths)
    for (int i = 0; i < 3; ++i)
      if (p.source() == x[i]) t.legs[i] = p;
  return t;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Recursive call on D[keep] plus the arcs s -> w in `extra` (host ids).
std::optional<Tripod> recurse(const Digraph& d, const Triple& x,
                              const VertexSet& keep,
                              const std::vector<Arc>& extra,
                              const std::function<DiPath(Vertex, Vertex)>& expand);

std::optional<Tripod> solve(const Digraph& d, const Triple& x) {
  const int n = d.order();
  auto cyc = long_cycle(d);
  if (!cyc) return std::nullopt;
  VertexSet y{(*cyc)[0], (*cyc)[1], (*cyc)[2]};
  VertexSet xs{x[0], x[1], x[2]};
  auto out = disjoint_set_to_set(d, xs, y, 2);
  if (out.linked()) return from_paths(*cyc, out.paths, x);
  Separation sep = *out.separation;

  while (true) {
    const VertexSet& W = sep.W;
    const VertexSet& S = sep.S;
    const VertexSet& Z = sep.Z;
    if (S.empty()) throw std::logic_error("tripod: empty separator in strong digraph");

    if (S.size() == 1) {
      const Vertex s = S[0];
      std::vector<Arc> extra;
      for (Vertex w : W)
        for (Vertex z : d.in(w))
          if (contains(Z, z)) {
            extra.emplace_back(s, w);
            break;
          }
      VertexSet keep = W;
      keep.push_back(s);
      VertexSet zs = Z;
      zs.push_back(s);
      VertexMask m = mask_of(n, zs);
      return recurse(d, x, keep, extra, [&, m](Vertex a, Vertex b) {
        VertexSet feeders;
        for (Vertex z : d.in(b))
          if (contains(Z, z)) feeders.push_back(z);
        auto q = bfs_path(d, {a}, feeders, m);
        if (!q) throw std::logic_error("tripod: no dipath through Z");
        q->vertices.push_back(b);
        return *q;
      });
    }

    const Vertex s1 = S[0], s2 = S[1];
    Arc back{-1, -1};
    for (Vertex z : Z) {
      for (Vertex w : d.out(z))
        if (contains(W, w)) {
          back = {z, w};
          break;
        }
      if (back.first >= 0) break;
    }

    if (back.first < 0) {
      VertexSet zs = Z;
      zs.push_back(s1);
      zs.push_back(s2);
      VertexMask m = mask_of(n, zs);
      std::vector<Arc> extra;
      if (!d.has_arc(s1, s2) && bfs_path(d, {s1}, {s2}, m)) extra.emplace_back(s1, s2);
      if (!d.has_arc(s2, s1) && bfs_path(d, {s2}, {s1}, m)) extra.emplace_back(s2, s1);
      VertexSet keep = W;
      keep.push_back(s1);
      keep.push_back(s2);
      return recurse(d, x, keep, extra, [&, m](Vertex a, Vertex b) {
        auto q = bfs_path(d, {a}, {b}, m);
        if (!q) throw std::logic_error("tripod: no dipath through Z");
        return *q;
      });
    }

    // An arc z1 -> w1 from Z back to W; close it into a cycle C'.
    const auto [z1, w1] = back;
    auto ret = bfs_path(d, {w1}, {z1});
    std::vector<Vertex> c2 = ret->vertices;  // w1 ... z1, then back to w1
    const bool has1 = std::find(c2.begin(), c2.end(), s1) != c2.end();
    const bool has2 = std::find(c2.begin(), c2.end(), s2) != c2.end();
    const size_t w_before = W.size();

    if (has1 && has2) {
      VertexSet y2{w1, s1, s2};
      auto o2 = disjoint_set_to_set(d, xs, y2, 2);
      if (o2.linked()) return from_paths(c2, o2.paths, x);
      sep = *o2.separation;
      if (sep.W.size() >= w_before)
        throw std::logic_error("tripod: W did not shrink");
      continue;
    }

    const Vertex a1 = has1 ? s1 : s2;  // the separator vertex on C'
    const Vertex a2 = has1 ? s2 : s1;
    VertexSet y2{w1, a1, z1};
    std::sort(y2.begin(), y2.end());
    auto o2 = disjoint_set_to_set(d, xs, y2, 2);
    if (o2.linked()) return from_paths(c2, o2.paths, x);
    Separation sp = *o2.separation;

    Vertex in_z = -1, in_w = -1;
    for (Vertex v : sp.S) {
      if (contains(Z, v)) in_z = v;
      if (contains(W, v)) in_w = v;
    }
    if (in_z >= 0) {
      // No (X,Y')-dipath avoids {in_w, a2}: rebuild the separation on it.
      if (in_w < 0) throw std::logic_error("tripod: separator misses W");
      VertexSet s3{std::min(in_w, a2), std::max(in_w, a2)};
      VertexSet start;
      for (Vertex v : xs)
        if (!contains(s3, v)) start.push_back(v);
      VertexSet w3 = outsection(d, start, mask_without(n, s3));
      for (Vertex v : y2)
        if (contains(w3, v))
          throw std::logic_error("tripod: rebuilt separation is not one");
      Separation rebuilt;
      rebuilt.W = w3;
      rebuilt.S = s3;
      for (Vertex v = 0; v < n; ++v)
        if (!contains(w3, v) && !contains(s3, v)) rebuilt.Z.push_back(v);
      rebuilt.bound = 2;
      rebuilt.anchor = Anchor::SetSet;
      rebuilt.sources = xs;
      rebuilt.sinks = y2;
      sp = rebuilt;
    }
    if (sp.W.size() < w_before) {
      sep = sp;
      continue;
    }

    // L = Z minus W' is entered only through a1; contract L into a1.
    if (!contains(sp.W, a2)) throw std::logic_error("tripod: second separator vertex not in W'");
    VertexSet L;
    for (Vertex z : Z)
      if (!contains(sp.W, z)) L.push_back(z);
    std::vector<Arc> extra;
    for (Vertex v = 0; v < n; ++v) {
      if (contains(L, v)) {
        for (Vertex u : d.in(v))
          if (u != a1 && !contains(L, u))
            throw std::logic_error("tripod: L has a second entry");
        continue;
      }
      if (v == a1) continue;
      for (Vertex z : d.in(v))
        if (contains(L, z)) {
          extra.emplace_back(a1, v);
          break;
        }
    }
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v)
      if (!contains(L, v)) keep.push_back(v);
    VertexSet ls = L;
    ls.push_back(a1);
    VertexMask m = mask_of(n, ls);
    return recurse(d, x, keep, extra, [&, m, L](Vertex a, Vertex b) {
      VertexSet feeders;
      for (Vertex z : d.in(b))
        if (contains(L, z)) feeders.push_back(z);
      auto q = bfs_path(d, {a}, feeders, m);
      if (!q) throw std::logic_error("tripod: no dipath through L");
      q->vertices.push_back(b);
      return *q;
    });
  }
}

std::optional<Tripod> recurse(const Digraph& d, const Triple& x,
                              const VertexSet& keep_in,
                              const std::vector<Arc>& extra,
                              const std::function<DiPath(Vertex, Vertex)>& expand) {
  VertexSet keep = keep_in;
  std::sort(keep.begin(), keep.end());
  auto sub = induced_subdigraph(d, keep);
  for (auto [a, b] : extra)
    if (!d.has_arc(a, b)) sub.graph.add_arc(sub.from_host[a], sub.from_host[b]);
  if (!is_strong(sub.graph))
    throw std::logic_error("tripod: reduced digraph is not strong");
  Triple cx{sub.from_host[x[0]], sub.from_host[x[1]], sub.from_host[x[2]]};
  auto child = solve(sub.graph, cx);
  if (!child) return std::nullopt;
  Tripod unfolded = unfold_tripod(sub.graph, *child);
  return lift(d, x, unfolded, sub.to_host, expand);
}

}  // namespace

std::optional<Tripod> tripod(const Digraph& d, const Triple& x) {
  if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2])
    throw std::invalid_argument("tripod: X must have three distinct vertices");
  for (Vertex v : x)
    if (v < 0 || v >= d.order()) throw std::invalid_argument("tripod: bad vertex");
  if (!is_strong(d)) throw std::invalid_argument("tripod: digraph is not strong");
  return solve(d, x);
}

}  // namespace subdiv
