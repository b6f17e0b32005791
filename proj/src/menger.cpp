#include "subdiv/menger.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace subdiv {

namespace {

constexpr int kInf = 1 << 29;

// Unit-capacity vertex-split network: in(v) = 2v, out(v) = 2v+1.
class Network {
 public:
  explicit Network(int nodes) : adj_(nodes) {}

  void add_edge(int a, int b, int cap) {
    adj_[a].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({b, cap, 0});
    adj_[b].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({a, 0, 0});
  }

  bool augment(int src, int snk) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{src};
    seen[src] = 1;
    while (!queue.empty() && !seen[snk]) {
      int a = queue.front();
      queue.pop_front();
      for (int e : adj_[a]) {
        const Edge& ed = edges_[e];
        if (ed.cap - ed.flow > 0 && !seen[ed.to]) {
          seen[ed.to] = 1;
          via[ed.to] = e;
          queue.push_back(ed.to);
        }
      }
    }
    if (!seen[snk]) return false;
    for (int a = snk; a != src;) {
      int e = via[a];
      edges_[e].flow += 1;
      edges_[e ^ 1].flow -= 1;
      a = edges_[e ^ 1].to;
    }
    return true;
  }

  std::vector<char> residual_reach(int src) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> todo{src};
    seen[src] = 1;
    while (!todo.empty()) {
      int a = todo.back();
      todo.pop_back();
      for (int e : adj_[a]) {
        const Edge& ed = edges_[e];
        if (ed.cap - ed.flow > 0 && !seen[ed.to]) {
          seen[ed.to] = 1;
          todo.push_back(ed.to);
        }
      }
    }
    return seen;
  }

  // Consumes the flow: one node sequence per unit leaving src.
  std::vector<std::vector<int>> decompose(int src, int snk) {
    std::vector<std::vector<int>> res;
    while (true) {
      std::vector<int> nodes;
      int a = src;
      while (a != snk) {
        int next = -1;
        for (int e : adj_[a])
          if ((e & 1) == 0 && edges_[e].flow > 0) {
            edges_[e].flow -= 1;
            next = edges_[e].to;
            break;
          }
        if (next < 0) return res;
        a = next;
        if (a != snk) nodes.push_back(a);
      }
      res.push_back(std::move(nodes));
    }
  }

 private:
  struct Edge {
    int to, cap, flow;
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

struct FlowResult {
  int value = 0;
  std::vector<std::vector<Vertex>> paths;
  std::vector<char> reach;
};

// vcap[v] is 0 or 1; src_nodes / snk_nodes are split-network nodes.
FlowResult run_flow(const Digraph& d, const VertexMask& mask,
                    const std::vector<int>& vcap,
                    const std::vector<int>& src_nodes,
                    const std::vector<int>& snk_nodes, int limit,
                    std::optional<Arc> skip) {
  const int n = d.order();
  const int src = 2 * n, snk = 2 * n + 1;
  Network net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive(mask, v)) continue;
    if (vcap[v] > 0) net.add_edge(in_node(v), out_node(v), vcap[v]);
    for (Vertex w : d.out(v))
      if (alive(mask, w) && !(skip && *skip == Arc{v, w}))
        net.add_edge(out_node(v), in_node(w), kInf);
  }
  for (int a : src_nodes) net.add_edge(src, a, kInf);
  for (int a : snk_nodes) net.add_edge(a, snk, kInf);

  FlowResult res;
  while (res.value < limit && net.augment(src, snk)) ++res.value;
  res.reach = net.residual_reach(src);
  for (auto& nodes : net.decompose(src, snk)) {
    std::vector<Vertex> p;
    for (int a : nodes)
      if (p.empty() || p.back() != a / 2) p.push_back(a / 2);
    res.paths.push_back(std::move(p));
  }
  return res;
}

// Classifies alive vertices from the residual reachability, then trims W
// to what the source side reaches inside D[W].
Separation extract(const Digraph& d, const VertexMask& mask,
                   const std::vector<char>& reach, Anchor anchor,
                   const VertexSet& sources, const VertexSet& sinks, int bound,
                   std::optional<Arc> skip) {
  const int n = d.order();
  std::vector<int> part(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive(mask, v)) continue;
    if (reach[out_node(v)])
      part[v] = 0;
    else if (reach[in_node(v)])
      part[v] = 1;
    else
      part[v] = 2;
  }
  if (anchor == Anchor::PairXY || anchor == Anchor::FromVertex)
    for (Vertex x : sources) part[x] = 0;
  if (anchor == Anchor::PairXY)
    for (Vertex y : sinks) part[y] = 2;

  VertexSet w_all, start;
  for (Vertex v = 0; v < n; ++v)
    if (part[v] == 0) w_all.push_back(v);
  for (Vertex x : sources)
    if (part[x] == 0) start.push_back(x);
  auto kept = outsection(d, start, mask_of(n, w_all));
  for (Vertex v : w_all)
    if (!std::binary_search(kept.begin(), kept.end(), v)) part[v] = 2;

  Separation sep;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] == 0) sep.W.push_back(v);
    if (part[v] == 1) sep.S.push_back(v);
    if (part[v] == 2) sep.Z.push_back(v);
  }
  sep.bound = bound;
  sep.anchor = anchor;
  sep.sources = sources;
  sep.sinks = sinks;
  sep.removed_arc = skip;
  return sep;
}

VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void require_alive(const Digraph& d, const VertexMask& mask,
                   const VertexSet& s) {
  for (Vertex v : s)
    if (v < 0 || v >= d.order() || !alive(mask, v))
      throw std::invalid_argument("terminal vertex not in digraph");
}

std::vector<int> unit_caps(const Digraph& d) {
  return std::vector<int>(d.order(), 1);
}

}  // namespace

MengerOutcome internally_disjoint(const Digraph& d, Vertex x, Vertex y, int k,
                                  const VertexMask& mask) {
  if (x == y) throw std::invalid_argument("internally_disjoint: x == y");
  if (k < 0) throw std::invalid_argument("negative k");
  require_alive(d, mask, {x, y});
  std::optional<Arc> skip;
  int need = k + 1;
  if (d.has_arc(x, y)) {
    skip = Arc{x, y};
    need = k;
  }
  auto caps = unit_caps(d);
  caps[x] = caps[y] = 0;
  auto flow = run_flow(d, mask, caps, {out_node(x)}, {in_node(y)}, need, skip);
  MengerOutcome res;
  if (flow.value < need) {
    res.separation = extract(d, mask, flow.reach, Anchor::PairXY, {x}, {y},
                             need - 1, skip);
    return res;
  }
  if (skip) res.paths.push_back(DiPath{{x, y}});
  for (auto& p : flow.paths) res.paths.push_back(DiPath{std::move(p)});
  return res;
}

MengerOutcome disjoint_set_to_set(const Digraph& d, const VertexSet& x_in,
                                  const VertexSet& y_in, int k,
                                  const VertexMask& mask) {
  if (x_in.empty() || y_in.empty())
    throw std::invalid_argument("disjoint_set_to_set: empty terminal set");
  if (k < 0) throw std::invalid_argument("negative k");
  VertexSet x = sorted_unique(x_in), y = sorted_unique(y_in);
  require_alive(d, mask, x);
  require_alive(d, mask, y);
  std::vector<int> src, snk;
  for (Vertex v : x) src.push_back(in_node(v));
  for (Vertex v : y) snk.push_back(out_node(v));
  auto flow = run_flow(d, mask, unit_caps(d), src, snk, k + 1, std::nullopt);
  MengerOutcome res;
  if (flow.value <= k) {
    res.separation = extract(d, mask, flow.reach, Anchor::SetSet, x, y, k,
                             std::nullopt);
    return res;
  }
  std::vector<char> in_x(d.order(), 0), in_y(d.order(), 0);
  for (Vertex v : x) in_x[v] = 1;
  for (Vertex v : y) in_y[v] = 1;
  for (auto& p : flow.paths) {
    int j = 0;
    while (!in_y[p[j]]) ++j;
    int i = j;
    while (!in_x[p[i]]) --i;
    res.paths.push_back(DiPath{{p.begin() + i, p.begin() + j + 1}});
  }
  return res;
}

MengerOutcome independent_from(const Digraph& d, Vertex x, const VertexSet& y_in,
                               int k, const VertexMask& mask) {
  if (y_in.empty()) throw std::invalid_argument("independent_from: empty Y");
  if (k < 0) throw std::invalid_argument("negative k");
  VertexSet y = sorted_unique(y_in);
  if (std::binary_search(y.begin(), y.end(), x))
    throw std::invalid_argument("independent_from: x in Y");
  require_alive(d, mask, {x});
  require_alive(d, mask, y);
  auto caps = unit_caps(d);
  caps[x] = 0;
  std::vector<int> snk;
  for (Vertex v : y) snk.push_back(out_node(v));
  auto flow =
      run_flow(d, mask, caps, {out_node(x)}, snk, k + 1, std::nullopt);
  MengerOutcome res;
  if (flow.value <= k) {
    res.separation = extract(d, mask, flow.reach, Anchor::FromVertex, {x}, y,
                             k, std::nullopt);
    return res;
  }
  std::vector<char> in_y(d.order(), 0);
  for (Vertex v : y) in_y[v] = 1;
  for (auto& p : flow.paths) {
    int j = 1;
    while (!in_y[p[j]]) ++j;
    res.paths.push_back(DiPath{{p.begin(), p.begin() + j + 1}});
  }
  return res;
}

MengerOutcome independent_to(const Digraph& d, const VertexSet& x_in, Vertex y,
                             int k, const VertexMask& mask) {
  VertexSet x = sorted_unique(x_in);
  MengerOutcome rev = independent_from(converse(d), y, x, k, mask);
  MengerOutcome res;
  if (rev.linked()) {
    for (auto& p : rev.paths) res.paths.push_back(reversed(p));
    return res;
  }
  // Swap sides, then trim W to what X\S reaches inside D[W].
  const Separation& c = *rev.separation;
  const int n = d.order();
  std::vector<char> in_s(n, 0);
  for (Vertex v : c.S) in_s[v] = 1;
  VertexSet start;
  for (Vertex v : x)
    if (!in_s[v]) start.push_back(v);
  auto kept = outsection(d, start, mask_of(n, c.Z));
  Separation sep;
  sep.W = kept;
  sep.S = c.S;
  for (Vertex v = 0; v < n; ++v)
    if (alive(mask, v) && !in_s[v] &&
        !std::binary_search(kept.begin(), kept.end(), v))
      sep.Z.push_back(v);
  sep.bound = k;
  sep.anchor = Anchor::ToVertex;
  sep.sources = x;
  sep.sinks = {y};
  res.separation = sep;
  return res;
}

namespace {

struct Auxiliary {
  Digraph graph;
  VertexMask mask;
  Vertex sink = -1;
  std::vector<Vertex> copy_target;  // aux vertex -> y_i, or -1
};

// Removes the targets (except `keep`), adds per-target copy sets fed by the
// in-neighbours of each target and drained into one new sink. `single`
// gets an arc to just one copy per target, so that a lone arc
// single->y_i cannot be reused as several handles.
Auxiliary build_auxiliary(const Digraph& d, const VertexMask& mask,
                          const std::vector<std::pair<Vertex, int>>& targets,
                          Vertex keep, Vertex single) {
  const int n = d.order();
  std::vector<char> removed(n, 0);
  for (auto [t, k] : targets)
    if (t != keep) removed[t] = 1;
  Auxiliary aux;
  aux.graph = Digraph(n);
  aux.mask.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) aux.mask[v] = alive(mask, v) && !removed[v];
  for (Vertex v = 0; v < n; ++v)
    if (aux.mask[v])
      for (Vertex w : d.out(v))
        if (aux.mask[w]) aux.graph.add_arc(v, w);
  aux.copy_target.assign(n, -1);
  aux.sink = aux.graph.add_vertex();
  aux.mask.push_back(1);
  aux.copy_target.push_back(-1);
  for (auto [t, k] : targets) {
    for (int c = 0; c < k; ++c) {
      Vertex b = aux.graph.add_vertex();
      aux.mask.push_back(1);
      aux.copy_target.push_back(t);
      aux.graph.add_arc(b, aux.sink);
      for (Vertex u : d.in(t)) {
        if (!aux.mask[u]) continue;
        if (u == single && c > 0) continue;
        aux.graph.add_arc(u, b);
      }
    }
  }
  return aux;
}

void check_targets(const Digraph& d, const std::vector<std::pair<Vertex, int>>& t) {
  if (t.empty()) throw std::invalid_argument("handles: no targets");
  std::set<Vertex> seen;
  for (auto [y, k] : t) {
    if (y < 0 || y >= d.order()) throw std::invalid_argument("bad target");
    if (k < 1) throw std::invalid_argument("target multiplicity < 1");
    if (!seen.insert(y).second) throw std::invalid_argument("repeated target");
  }
}

std::vector<DiPath> group_by_target(
    std::vector<DiPath> paths,
    const std::vector<std::pair<Vertex, int>>& targets) {
  std::vector<DiPath> res;
  for (auto [t, k] : targets)
    for (const auto& p : paths)
      if (p.target() == t) res.push_back(p);
  return res;
}

}  // namespace

HandlesOutcome handles(const Digraph& d, const HandleSpec& spec,
                       const VertexMask& mask) {
  check_targets(d, spec.targets);
  const Vertex x = spec.hub;
  require_alive(d, mask, {x});
  int k = 0;
  for (auto [t, c] : spec.targets) k += c;
  HandlesOutcome res;
  for (auto [t, c] : spec.targets)
    if (!alive(mask, t)) return res;
  auto aux = build_auxiliary(d, mask, spec.targets, x, x);
  auto out = internally_disjoint(aux.graph, x, aux.sink, k - 1, aux.mask);
  if (!out.linked()) return res;
  std::vector<DiPath> hs;
  for (auto& p : out.paths) {
    p.vertices.pop_back();
    p.vertices.back() = aux.copy_target[p.vertices.back()];
    hs.push_back(std::move(p));
  }
  res.handles = group_by_target(std::move(hs), spec.targets);
  res.found = true;
  return res;
}

bool validate_handles(const Digraph& d, const HandleSpec& spec,
                      const std::vector<DiPath>& hs) {
  const Vertex x = spec.hub;
  std::vector<char> used(d.order(), 0);
  used[x] = 1;
  for (auto [t, k] : spec.targets) used[t] = 1;
  std::set<std::vector<Vertex>> distinct;
  size_t pos = 0;
  for (auto [t, k] : spec.targets) {
    for (int c = 0; c < k; ++c, ++pos) {
      if (pos >= hs.size()) return false;
      const auto& v = hs[pos].vertices;
      if (v.size() < 2 || v.front() != x || v.back() != t) return false;
      DiPath open{v};
      if (t == x) {
        if (v.size() < 3) return false;
        open.vertices.pop_back();
        if (!d.has_arc(open.target(), x)) return false;
      }
      if (!is_dipath(d, open)) return false;
      for (size_t i = 1; i + 1 < v.size(); ++i) {
        if (used[v[i]]) return false;
        used[v[i]] = 1;
      }
      if (!distinct.insert(v).second) return false;
    }
  }
  return pos == hs.size();
}

std::optional<std::vector<DiPath>> set_to_targets(
    const Digraph& d, const VertexSet& x_in,
    const std::vector<std::pair<Vertex, int>>& targets,
    const VertexMask& mask) {
  check_targets(d, targets);
  VertexSet x = sorted_unique(x_in);
  for (auto [t, k] : targets)
    if (std::binary_search(x.begin(), x.end(), t))
      throw std::invalid_argument("set_to_targets: X meets targets");
  int k = 0;
  for (auto [t, c] : targets) k += c;
  for (auto [t, c] : targets)
    if (!alive(mask, t)) return std::nullopt;
  auto aux = build_auxiliary(d, mask, targets, -1, -1);
  Vertex s = aux.graph.add_vertex();
  aux.mask.push_back(1);
  aux.copy_target.push_back(-1);
  for (Vertex v : x)
    if (aux.mask[v]) aux.graph.add_arc(s, v);
  auto out = internally_disjoint(aux.graph, s, aux.sink, k - 1, aux.mask);
  if (!out.linked()) return std::nullopt;
  std::vector<DiPath> ps;
  for (auto& p : out.paths) {
    p.vertices.pop_back();
    p.vertices.back() = aux.copy_target[p.vertices.back()];
    p.vertices.erase(p.vertices.begin());
    ps.push_back(std::move(p));
  }
  return group_by_target(std::move(ps), targets);
}

}  // namespace subdiv
