#include "subdiv/detectors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "subdiv/menger.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/shunt.hpp"
#include "subdiv/tripod.hpp"

namespace subdiv {

namespace {

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

bool reach_set(const Digraph& d, const VertexSet& from, const VertexSet& to,
               const VertexMask& mask) {
  return bfs_path(d, sorted(from), sorted(to), mask).has_value();
}

VertexMask without(const Digraph& d, const VertexSet& removed) {
  return mask_without(d.order(), sorted(removed));
}

bool distinct(std::initializer_list<Vertex> vs) {
  std::set<Vertex> s(vs);
  return s.size() == vs.size();
}

// Calls body on every k-subset of items (ascending) until it returns true.
template <class F>
bool any_subset(const VertexSet& items, int k, F body) {
  const int n = static_cast<int>(items.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet pick(k);
    for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
    if (body(pick)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet complement(int n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// A dipath of length >= 1 from one path of `ps` to a different one whose
// interior avoids every path and every vertex in `blocked`.
bool connects_paths(const Digraph& d, const std::vector<DiPath>& ps,
                    const VertexSet& blocked) {
  const int n = d.order();
  std::vector<int> owner(n, -1);
  for (Vertex b : blocked) owner[b] = -2;
  for (int i = 0; i < static_cast<int>(ps.size()); ++i)
    for (Vertex v : ps[i].vertices) owner[v] = i;
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
    std::vector<char> seen(n, 0);
    std::deque<Vertex> todo(ps[i].vertices.begin(), ps[i].vertices.end());
    while (!todo.empty()) {
      Vertex u = todo.front();
      todo.pop_front();
      for (Vertex w : d.out(u)) {
        if (owner[w] >= 0 && owner[w] != i) return true;
        if (owner[w] == -1 && !seen[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<SubdivisionWitness> find_subdivision(const Digraph& f,
                                                   const Digraph& d,
                                                   const Decider& decide) {
  if (!decide(d)) return std::nullopt;
  Digraph h = d;
  for (auto [u, v] : d.arcs()) {
    h.remove_arc(u, v);
    if (!decide(h)) h.add_arc(u, v);
  }
  std::vector<std::vector<Vertex>> candidates(f.order());
  for (Vertex a = 0; a < f.order(); ++a)
    for (Vertex v = 0; v < h.order(); ++v)
      if (h.in_degree(v) == f.in_degree(a) && h.out_degree(v) == f.out_degree(a))
        candidates[a].push_back(v);
  OracleBudget budget{h.order(), 2'000'000'000};
  auto res = brute_force_subdivision_among(f, h, budget, candidates);
  if (res.exceeded()) throw std::runtime_error("witness extraction exceeded its budget");
  if (!res.found() || !validate_witness(f, d, *res.witness))
    throw std::logic_error("decision procedure inconsistent");
  return res.witness;
}

bool detect_w3(const Digraph& d) {
  const int n = d.order();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) < 3) continue;
    for (const VertexSet& g : strong_components(d, without(d, {v}))) {
      if (g.size() < 3) continue;
      auto sub = induced_subdigraph(d, g);
      const bool hit = any_subset(g, 3, [&](const VertexSet& x) {
        VertexSet rest;
        std::set_difference(g.begin(), g.end(), x.begin(), x.end(), std::back_inserter(rest));
        if (!independent_from(d, v, x, 2, without(d, rest)).linked()) return false;
        Triple t{sub.from_host[x[0]], sub.from_host[x[1]], sub.from_host[x[2]]};
        return tripod(sub.graph, t).has_value();
      });
      if (hit) return true;
    }
  }
  return false;
}

bool detect_z4(const Digraph& d) {
  const int n = d.order();
  for (Vertex dv = 0; dv < n; ++dv) {
    if (d.out_degree(dv) < 3) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (b == dv || d.out_degree(b) < 2) continue;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex c = a + 1; c < n; ++c) {
          if (!distinct({a, b, c, dv})) continue;
          if (independent_from(d, dv, sorted({a, b, c}), 2).linked() &&
              independent_from(d, b, {a, c}, 1, without(d, {dv})).linked())
            return true;
        }
    }
  }
  return false;
}

bool detect_w2_forced(const Digraph& d, Vertex b, Vertex c) {
  if (b == c) throw std::invalid_argument("b-vertex and c-vertex must differ");
  const int n = d.order();
  if (b < 0 || c < 0 || b >= n || c >= n) throw std::invalid_argument("vertex out of range");
  if (d.out_degree(c) < 2) return false;
  VertexSet s;
  for (const VertexSet& comp : strong_components(d, without(d, {c})))
    if (std::binary_search(comp.begin(), comp.end(), b)) s = comp;
  return any_subset(s, 2, [&](const VertexSet& x) {
    VertexSet rest;
    std::set_difference(s.begin(), s.end(), x.begin(), x.end(), std::back_inserter(rest));
    if (!independent_from(d, c, x, 1, without(d, rest)).linked()) return false;
    if (x[0] == b || x[1] == b) return true;
    return independent_to(d, x, b, 1, mask_of(n, s)).linked();
  });
}

bool detect_w2(const Digraph& d) {
  for (Vertex c = 0; c < d.order(); ++c)
    for (Vertex b = 0; b < d.order(); ++b)
      if (b != c && detect_w2_forced(d, b, c)) return true;
  return false;
}

bool for_each_spider_copy(const Spider& t, const Digraph& d, Vertex body,
                          const std::function<bool(const VertexSet&)>& visit) {
  std::vector<char> used(d.order(), 0);
  used[body] = 1;
  VertexSet copy;
  const int legs = static_cast<int>(t.legs.size());
  // Extends leg i from `at` by `left` more vertices.
  std::function<bool(int, Vertex, int)> grow = [&](int i, Vertex at, int left) -> bool {
    if (left == 0) {
      if (i + 1 == legs) return visit(sorted(copy));
      return grow(i + 1, body, std::abs(t.legs[i + 1]));
    }
    const auto& next = t.legs[i] > 0 ? d.out(at) : d.in(at);
    for (Vertex w : next) {
      if (used[w]) continue;
      used[w] = 1;
      copy.push_back(w);
      const bool stop = grow(i, w, left - 1);
      copy.pop_back();
      used[w] = 0;
      if (stop) return true;
    }
    return false;
  };
  if (legs == 0) return visit({});
  return grow(0, body, std::abs(t.legs[0]));
}

bool detect_spider(const Spider& t, const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (for_each_spider_copy(t, d, v, [](const VertexSet&) { return true; })) return true;
  return false;
}

bool detect_union_spider(int f_order, const Spider& t, const Digraph& d,
                         const Decider& decide_f) {
  const int n = d.order();
  if (n < f_order + t.order()) return false;
  std::set<VertexSet> tried;
  for (Vertex v = 0; v < n; ++v) {
    const bool hit = for_each_spider_copy(t, d, v, [&](const VertexSet& legs) {
      VertexSet w = legs;
      w.push_back(v);
      w = sorted(w);
      if (!tried.insert(w).second) return false;
      return decide_f(induced_subdigraph(d, complement(n, w)).graph);
    });
    if (hit) return true;
  }
  return false;
}

bool detect_glue_spider(const Spider& t, const Digraph& d,
                        const RootedDecider& decide_f_at) {
  const int n = d.order();
  for (Vertex v = 0; v < n; ++v) {
    std::set<VertexSet> tried;
    const bool hit = for_each_spider_copy(t, d, v, [&](const VertexSet& w) {
      if (!tried.insert(w).second) return false;
      auto sub = induced_subdigraph(d, complement(n, w));
      return decide_f_at(sub.graph, sub.from_host[v]);
    });
    if (hit) return true;
  }
  return false;
}

bool detect_cycle_through(const Digraph& d, Vertex v) {
  for (Vertex w : d.out(v))
    if (reaches(d, w, v)) return true;
  return false;
}

bool detect_symmetric_star(const Digraph& d, Vertex v, int k) {
  if (k < 1) throw std::invalid_argument("star needs k >= 1");
  if (d.out_degree(v) < k || d.in_degree(v) < k) return false;
  return handles(d, HandleSpec{v, {{v, k}}}).found;
}

bool detect_superstar(const Digraph& d, Vertex v, int k) {
  if (k < 2) throw std::invalid_argument("superstar needs k >= 2");
  const VertexMask m = without(d, {v});
  return any_subset(d.out(v), k, [&](const VertexSet& x) {
    return any_subset(d.in(v), k, [&](const VertexSet& y) {
      auto link = disjoint_set_to_set(d, x, y, k - 1, m);
      return link.linked() && connects_paths(d, link.paths, {v});
    });
  });
}

namespace {

bool e1(const Digraph& d) {
  const int n = d.order();
  for (Vertex a = 0; a < n; ++a)
    if (any_subset(d.out(a), 2, [&](const VertexSet& s) {
          for (Vertex dv = 0; dv < n; ++dv) {
            if (!distinct({a, s[0], s[1], dv})) continue;
            if (reach_set(d, s, {dv}, without(d, {a})) &&
                independent_to(d, s, a, 1, without(d, {dv})).linked())
              return true;
          }
          return false;
        }))
      return true;
  return false;
}

bool e2(const Digraph& d) {
  const int n = d.order();
  for (Vertex a = 0; a < n; ++a)
    if (any_subset(d.out(a), 3, [&](const VertexSet& u) {
          for (Vertex dv = 0; dv < n; ++dv) {
            if (dv == a) continue;
            VertexSet in = insection(d, {dv}, without(d, {a}));
            int hits = 0;
            for (Vertex x : u) hits += std::binary_search(in.begin(), in.end(), x);
            if (hits < 2) continue;
            if (!std::binary_search(u.begin(), u.end(), dv)) {
              if (set_to_targets(d, u, {{a, 2}, {dv, 1}})) return true;
            } else {
              VertexSet rest;
              for (Vertex x : u)
                if (x != dv) rest.push_back(x);
              if (independent_to(d, rest, a, 1, without(d, {dv})).linked()) return true;
            }
          }
          return false;
        }))
      return true;
  return false;
}

bool e3(const Digraph& d) {
  const int n = d.order();
  for (Vertex a = 0; a < n; ++a)
    if (any_subset(d.out(a), 2, [&](const VertexSet& s) {
          for (Vertex dv = 0; dv < n; ++dv) {
            if (!distinct({a, s[0], s[1], dv})) continue;
            if (reach_set(d, s, {dv}, without(d, {a})) &&
                independent_to(d, sorted({s[0], s[1], dv}), a, 2).linked())
              return true;
          }
          return false;
        }))
      return true;
  return false;
}

bool e4(const Digraph& d) {
  const int n = d.order();
  for (Vertex a = 0; a < n; ++a) {
    if (d.out_degree(a) < 3) continue;
    for (Vertex s : d.in(a))
      for (Vertex dv = 0; dv < n; ++dv)
        if (distinct({a, s, dv}) && handles(d, HandleSpec{a, {{s, 1}, {dv, 2}}}).found)
          return true;
  }
  return false;
}

bool e5(const Digraph& d) {
  const int n = d.order();
  for (Vertex b = 0; b < n; ++b)
    if (any_subset(d.in(b), 3, [&](const VertexSet& s) {
          for (Vertex c = 0; c < n; ++c) {
            if (c == b) continue;
            const bool c_in = std::binary_search(s.begin(), s.end(), c);
            VertexSet rest;
            for (Vertex x : s)
              if (x != c) rest.push_back(x);
            const bool paths = c_in
                ? independent_from(d, c, rest, 1, without(d, {b})).linked()
                : independent_from(d, c, s, 2, without(d, {b})).linked();
            if (paths && reach_set(d, {b}, rest, without(d, {c}))) return true;
          }
          return false;
        }))
      return true;
  return false;
}

bool e6(const Digraph& d) {
  for (Vertex b = 0; b < d.order(); ++b) {
    if (d.out_degree(b) < 3) continue;
    for (Vertex s : d.in(b))
      for (auto [dv, c] : d.arcs()) {
        if (!distinct({s, b, c, dv})) continue;
        if (independent_from(d, b, sorted({s, c, dv}), 2).linked() &&
            reaches(d, c, s, without(d, {b, dv})))
          return true;
      }
  }
  return false;
}

// E7 with the arc ab kept as an arc.
bool e7_direct(const Digraph& d) {
  for (auto [a, b] : d.arcs())
    for (Vertex u : d.out(a)) {
      if (u == b) continue;
      for (Vertex v : d.out(u)) {
        if (!distinct({a, b, u, v})) continue;
        if (independent_to(d, sorted({v, b}), a, 1, without(d, {u})).linked() &&
            reaches(d, v, b, without(d, {a, u})))
          return true;
      }
    }
  return false;
}

// E8 with the arc ab kept as an arc.
bool e8_direct(const Digraph& d) {
  for (Vertex a = 0; a < d.order(); ++a)
    for (Vertex b : d.out(a))
      for (Vertex u : d.out(a)) {
        if (u == b) continue;
        for (Vertex t : d.in(a)) {
          if (t == b || t == u) continue;
          if (independent_from(d, b, sorted({a, t}), 1, without(d, {u})).linked() &&
              reaches(d, u, t, without(d, {a, b})))
            return true;
        }
      }
  return false;
}

}  // namespace

bool detect_g7(const Digraph& d) {
  for (Vertex a = 0; a < d.order(); ++a) {
    if (d.out_degree(a) < 2 || d.in_degree(a) < 2) continue;
    for (Vertex w1 : d.out(a))
      for (Vertex w2 : d.out(a)) {
        if (w1 == w2) continue;
        const VertexMask m = without(d, {a, w1, w2});
        for (Vertex x1 : d.out(w1))
          for (Vertex x2 : d.out(w2)) {
            if (!distinct({a, w1, w2, x1, x2})) continue;
            const bool hit = any_subset(d.in(a), 2, [&](const VertexSet& y) {
              if (y[0] == w1 || y[0] == w2 || y[1] == w1 || y[1] == w2) return false;
              auto link = disjoint_set_to_set(d, sorted({x1, x2}), y, 1, m);
              return link.linked() && connects_paths(d, link.paths, {a, w1, w2});
            });
            if (hit) return true;
          }
      }
  }
  return false;
}

bool detect_ei(int i, const Digraph& d) {
  switch (i) {
    case 1: return e1(d);
    case 2: return e2(d);
    case 3: return e3(d);
    case 4: return e4(d);
    case 5: return e5(d);
    case 6: return e6(d);
    case 7: return e7_direct(d) || detect_g7(d);
    case 8: return e8_direct(d) || detect_g7(d);
  }
  throw std::invalid_argument("E index must be in 1..8");
}

bool detect_e9(const Digraph& d) {
  const int n = d.order();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) < 2 || d.in_degree(v) < 2) continue;
    Digraph h = d;
    for (Vertex w : d.out(v)) h.remove_arc(v, w);
    for (Vertex w : d.in(v)) h.remove_arc(w, v);
    const bool hit = any_subset(d.out(v), 2, [&](const VertexSet& s) {
      return any_subset(d.in(v), 2, [&](const VertexSet& t) {
        VertexSet common;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
        if (common.empty()) return shunt(h, s[0], s[1], t[0], t[1]).has_value();
        if (common.size() == 2) {
          for (int dir = 0; dir < 2; ++dir) {
            const Vertex p = s[dir], q = s[1 - dir];
            for (Vertex w : d.out(p))
              if (w != q && w != v && reaches(d, w, q, without(d, {v, p}))) return true;
          }
          return false;
        }
        const Vertex c = common[0];
        const Vertex sp = s[0] == c ? s[1] : s[0];
        const Vertex tp = t[0] == c ? t[1] : t[0];
        for (Vertex r : d.out(c))
          if (distinct({r, sp, tp, v}) && reaches(d, r, tp, without(d, {v, c})) &&
              reaches(d, sp, tp, without(d, {v, c, r})))
            return true;
        for (Vertex r : d.in(c))
          if (distinct({r, sp, tp, v}) && reaches(d, sp, r, without(d, {v, c})) &&
              reaches(d, sp, tp, without(d, {v, c, r})))
            return true;
        return false;
      });
    });
    if (hit) return true;
  }
  return false;
}

}  // namespace subdiv
