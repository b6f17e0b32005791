// Exhaustive reference implementations used only by the tests. Nothing here
// calls into the flow code; everything is plain path enumeration.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "subdiv/digraph.hpp"

namespace brute {

using subdiv::Digraph;
using subdiv::Vertex;
using Path = std::vector<Vertex>;

// Every simple dipath starting in `from` (length >= 0) whose last vertex
// satisfies `stop`; avoid[] vertices are never entered.
inline std::vector<Path> paths(const Digraph& d, const std::vector<Vertex>& from,
                               const std::function<bool(Vertex)>& stop,
                               std::vector<char> avoid = {}) {
  if (avoid.empty()) avoid.assign(d.order(), 0);
  std::vector<Path> out;
  Path cur;
  std::function<void(Vertex)> go = [&](Vertex v) {
    cur.push_back(v);
    avoid[v] = 1;
    if (stop(v)) out.push_back(cur);
    for (Vertex w : d.out(v))
      if (!avoid[w]) go(w);
    avoid[v] = 0;
    cur.pop_back();
  };
  for (Vertex s : from)
    if (!avoid[s]) go(s);
  return out;
}

// Largest family of paths whose pairwise "clash" vertices are disjoint.
// shared[v] marks vertices that may be reused (endpoints shared by design).
inline int max_family(const std::vector<Path>& ps, const std::vector<char>& shared,
                      int n) {
  int best = 0;
  std::vector<int> used(n, 0);
  std::set<Path> chosen;
  std::function<void(size_t, int)> go = [&](size_t i, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(ps.size() - i) <= best) return;
    for (size_t j = i; j < ps.size(); ++j) {
      bool ok = !chosen.count(ps[j]);
      for (Vertex v : ps[j])
        if (!shared[v] && used[v]) ok = false;
      if (!ok) continue;
      for (Vertex v : ps[j])
        if (!shared[v]) used[v] = 1;
      chosen.insert(ps[j]);
      go(j + 1, count + 1);
      chosen.erase(ps[j]);
      for (Vertex v : ps[j])
        if (!shared[v]) used[v] = 0;
    }
  };
  go(0, 0);
  return best;
}

inline int max_internally_disjoint(const Digraph& d, Vertex x, Vertex y) {
  auto ps = paths(d, {x}, [&](Vertex v) { return v == y; });
  std::vector<char> shared(d.order(), 0);
  shared[x] = shared[y] = 1;
  return max_family(ps, shared, d.order());
}

inline int max_disjoint_set(const Digraph& d, const std::vector<Vertex>& xs,
                            const std::vector<Vertex>& ys) {
  auto ps = paths(d, xs, [&](Vertex v) {
    return std::find(ys.begin(), ys.end(), v) != ys.end();
  });
  return max_family(ps, std::vector<char>(d.order(), 0), d.order());
}

inline int max_independent_from(const Digraph& d, Vertex x,
                                 const std::vector<Vertex>& ys) {
  auto ps = paths(d, {x}, [&](Vertex v) {
    return std::find(ys.begin(), ys.end(), v) != ys.end();
  });
  std::vector<char> shared(d.order(), 0);
  shared[x] = 1;
  return max_family(ps, shared, d.order());
}

}  // namespace brute

namespace brute {

// Naive subdivision test: every injective branch map, then the full
// cartesian product of candidate paths per arc, checked for disjointness.
inline bool has_subdivision(const Digraph& f, const Digraph& d) {
  const int k = f.order(), n = d.order();
  if (k > n) return false;
  auto arcs = f.arcs();
  std::vector<Vertex> map(k, -1);
  std::vector<char> taken(n, 0);
  std::function<bool(int)> assign = [&](int a) -> bool {
    if (a == k) {
      std::vector<char> branch(n, 0);
      for (Vertex v : map) branch[v] = 1;
      std::vector<std::vector<Path>> options;
      for (auto [u, v] : arcs) {
        std::vector<char> avoid = branch;
        avoid[map[u]] = 0;
        avoid[map[v]] = 0;
        Vertex t = map[v];
        std::vector<Path> ps;
        for (auto& p : paths(d, {map[u]}, [&](Vertex w) { return w == t; }, avoid))
          if (p.size() >= 2) ps.push_back(p);
        options.push_back(ps);
      }
      std::vector<char> used(n, 0);
      std::function<bool(size_t)> pick = [&](size_t i) -> bool {
        if (i == options.size()) return true;
        for (const auto& p : options[i]) {
          bool ok = true;
          for (size_t j = 1; j + 1 < p.size(); ++j) ok &= !used[p[j]];
          if (!ok) continue;
          for (size_t j = 1; j + 1 < p.size(); ++j) used[p[j]] = 1;
          if (pick(i + 1)) return true;
          for (size_t j = 1; j + 1 < p.size(); ++j) used[p[j]] = 0;
        }
        return false;
      };
      return pick(0);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (taken[v]) continue;
      taken[v] = 1;
      map[a] = v;
      if (assign(a + 1)) return true;
      taken[v] = 0;
    }
    return false;
  };
  return assign(0);
}

}  // namespace brute

namespace brute {

// Some dipath of length >= 2 from `from` to `to` whose interior avoids every
// marked vertex.
inline bool long_hop(const Digraph& d, const std::vector<char>& from,
                     const std::vector<char>& to, const std::vector<char>& taken) {
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> todo;
  for (Vertex a = 0; a < d.order(); ++a)
    if (from[a])
      for (Vertex o : d.out(a))
        if (!taken[o] && !seen[o]) seen[o] = 1, todo.push_back(o);
  while (!todo.empty()) {
    Vertex o = todo.back();
    todo.pop_back();
    for (Vertex b : d.out(o)) {
      if (to[b]) return true;
      if (!taken[b] && !seen[b]) seen[b] = 1, todo.push_back(b);
    }
  }
  return false;
}

// Every pair of disjoint terminal paths, then a long hop between them.
inline bool has_shunt(const Digraph& d, Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
  const int n = d.order();
  for (int flip = 0; flip < 2; ++flip) {
    const Vertex e1 = flip ? t2 : t1, e2 = flip ? t1 : t2;
    std::vector<char> avoid1(n, 0);
    avoid1[s2] = avoid1[e2] = 1;
    for (const auto& p : paths(d, {s1}, [&](Vertex v) { return v == e1; }, avoid1)) {
      if (p.back() != e1) continue;
      std::vector<char> avoid2(n, 0);
      for (Vertex v : p) avoid2[v] = 1;
      for (const auto& q : paths(d, {s2}, [&](Vertex v) { return v == e2; }, avoid2)) {
        if (q.back() != e2) continue;
        std::vector<char> on_p(n, 0), on_q(n, 0), taken(n, 0);
        for (Vertex v : p) on_p[v] = taken[v] = 1;
        for (Vertex v : q) on_q[v] = taken[v] = 1;
        if (long_hop(d, on_p, on_q, taken) || long_hop(d, on_q, on_p, taken)) return true;
      }
    }
  }
  return false;
}

}  // namespace brute
