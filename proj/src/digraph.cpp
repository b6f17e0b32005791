#include "subdiv/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace subdiv {

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  out_.resize(n);
  in_.resize(n);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& o = out_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

void Digraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at " + std::to_string(u));
  auto& o = out_[u];
  auto it = std::lower_bound(o.begin(), o.end(), v);
  if (it != o.end() && *it == v)
    throw std::invalid_argument("duplicate arc " + std::to_string(u) + " " +
                                std::to_string(v));
  o.insert(it, v);
  auto& i = in_[v];
  i.insert(std::lower_bound(i.begin(), i.end(), u), u);
  ++m_;
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  auto& o = out_[u];
  auto it = std::lower_bound(o.begin(), o.end(), v);
  if (it == o.end() || *it != v) throw std::invalid_argument("no such arc");
  o.erase(it);
  auto& i = in_[v];
  i.erase(std::lower_bound(i.begin(), i.end(), u));
  --m_;
}

Vertex Digraph::add_vertex() {
  out_.emplace_back();
  in_.emplace_back();
  return order() - 1;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> res;
  res.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) res.emplace_back(u, v);
  return res;
}

bool is_dipath(const Digraph& d, const DiPath& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(d.order(), 0);
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= d.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !d.has_arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

DiPath reversed(const DiPath& p) {
  return DiPath{{p.vertices.rbegin(), p.vertices.rend()}};
}

DiPath concat(const DiPath& p, const DiPath& q) {
  if (p.target() != q.source())
    throw std::logic_error("concat: paths do not meet");
  DiPath r = p;
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  return r;
}

DiPath subpath(const DiPath& p, int i, int j) {
  return DiPath{{p.vertices.begin() + i, p.vertices.begin() + j + 1}};
}

std::vector<VertexSet> strong_components(const Digraph& d,
                                         const VertexMask& mask) {
  // Tarjan, iterative. Tarjan emits components in reverse topological
  // order, so the result is reversed at the end.
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> comps;
  int counter = 0;
  std::vector<std::pair<Vertex, size_t>> call;
  for (Vertex root = 0; root < n; ++root) {
    if (!alive(mask, root) || index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& nb = d.out(v);
      if (pos < nb.size()) {
        Vertex w = nb[pos++];
        if (!alive(mask, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexSet comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  std::reverse(comps.begin(), comps.end());
  return comps;
}

bool is_strong(const Digraph& d) {
  return d.order() > 0 && strong_components(d).size() == 1;
}

namespace {

VertexSet search(const Digraph& d, const VertexSet& x, const VertexMask& mask,
                 bool forward) {
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> todo;
  for (Vertex v : x)
    if (alive(mask, v) && !seen[v]) {
      seen[v] = 1;
      todo.push_back(v);
    }
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : forward ? d.out(v) : d.in(v))
      if (alive(mask, w) && !seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
  }
  VertexSet res;
  for (Vertex v = 0; v < d.order(); ++v)
    if (seen[v]) res.push_back(v);
  return res;
}

}  // namespace

VertexSet outsection(const Digraph& d, const VertexSet& x,
                     const VertexMask& mask) {
  return search(d, x, mask, true);
}

VertexSet insection(const Digraph& d, const VertexSet& x,
                    const VertexMask& mask) {
  return search(d, x, mask, false);
}

bool reaches(const Digraph& d, Vertex from, Vertex to, const VertexMask& mask) {
  if (!alive(mask, from) || !alive(mask, to)) return false;
  auto s = outsection(d, {from}, mask);
  return std::binary_search(s.begin(), s.end(), to);
}

std::optional<DiPath> bfs_path(const Digraph& d, const VertexSet& from,
                               const VertexSet& to, const VertexMask& mask) {
  const int n = d.order();
  std::vector<char> target(n, 0);
  for (Vertex v : to)
    if (alive(mask, v)) target[v] = 1;
  std::vector<Vertex> parent(n, -2);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (!alive(mask, v) || parent[v] != -2) continue;
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (target[v]) {
      DiPath p;
      for (Vertex u = v; u != -1; u = parent[u]) p.vertices.push_back(u);
      std::reverse(p.vertices.begin(), p.vertices.end());
      return p;
    }
    for (Vertex w : d.out(v))
      if (alive(mask, w) && parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  return std::nullopt;
}

Digraph converse(const Digraph& d) {
  Digraph c(d.order());
  for (auto [u, v] : d.arcs()) c.add_arc(v, u);
  return c;
}

bool is_big(const Digraph& d, Vertex v) {
  int o = d.out_degree(v), i = d.in_degree(v);
  return o >= 3 || i >= 3 || (o == 2 && i == 2);
}

VertexSet big_vertices(const Digraph& d) {
  VertexSet res;
  for (Vertex v = 0; v < d.order(); ++v)
    if (is_big(d, v)) res.push_back(v);
  return res;
}

std::vector<std::pair<Vertex, Vertex>> two_cycle_graph(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : d.arcs())
    if (u < v && d.has_arc(v, u)) edges.emplace_back(u, v);
  return edges;
}

Multidigraph big_paths_digraph(const Digraph& d) {
  Multidigraph bp;
  bp.vertices = big_vertices(d);
  std::vector<char> big(d.order(), 0);
  for (Vertex v : bp.vertices) big[v] = 1;
  auto thin = [&](Vertex v) {
    return d.in_degree(v) == 1 && d.out_degree(v) == 1;
  };
  for (Vertex u : bp.vertices) {
    for (Vertex w : d.out(u)) {
      // Walk the chain of (1,1) vertices; it stops at a big vertex or dies.
      Vertex cur = w;
      int steps = 0;
      while (!big[cur] && thin(cur) && cur != u && steps <= d.order()) {
        cur = d.out(cur).front();
        ++steps;
      }
      if (big[cur] && cur != u) bp.arcs.emplace_back(u, cur);
    }
  }
  std::sort(bp.arcs.begin(), bp.arcs.end());
  return bp;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep) {
  InducedSubdigraph res;
  res.from_host.assign(d.order(), -1);
  for (Vertex v : keep) {
    if (res.from_host[v] != -1) continue;
    res.from_host[v] = static_cast<Vertex>(res.to_host.size());
    res.to_host.push_back(v);
  }
  res.graph = Digraph(static_cast<int>(res.to_host.size()));
  for (size_t i = 0; i < res.to_host.size(); ++i)
    for (Vertex w : d.out(res.to_host[i]))
      if (res.from_host[w] != -1)
        res.graph.add_arc(static_cast<Vertex>(i), res.from_host[w]);
  return res;
}

VertexMask mask_without(int n, const VertexSet& removed) {
  VertexMask m(n, 1);
  for (Vertex v : removed) m[v] = 0;
  return m;
}

VertexMask mask_of(int n, const VertexSet& kept) {
  VertexMask m(n, 0);
  for (Vertex v : kept) m[v] = 1;
  return m;
}

bool validate_separation(const Digraph& d, const Separation& sep,
                         const VertexMask& mask) {
  const int n = d.order();
  std::vector<int> part(n, -1);
  int idx = 0;
  for (const VertexSet* s : {&sep.W, &sep.S, &sep.Z}) {
    for (Vertex v : *s) {
      if (v < 0 || v >= n || !alive(mask, v) || part[v] != -1) return false;
      part[v] = idx;
    }
    ++idx;
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive(mask, v) && part[v] == -1) return false;
  if (static_cast<int>(sep.S.size()) > sep.bound) return false;
  auto skip = [&](Vertex u, Vertex v) {
    return sep.removed_arc && *sep.removed_arc == Arc{u, v};
  };
  for (Vertex u : sep.W)
    for (Vertex v : d.out(u))
      if (alive(mask, v) && part[v] == 2 && !skip(u, v)) return false;

  const bool vertex_source =
      sep.anchor == Anchor::PairXY || sep.anchor == Anchor::FromVertex;
  const bool vertex_sink =
      sep.anchor == Anchor::PairXY || sep.anchor == Anchor::ToVertex;
  if (sep.sources.empty() || sep.sinks.empty()) return false;
  for (Vertex x : sep.sources) {
    if (x < 0 || x >= n || part[x] < 0) return false;
    if (vertex_source ? part[x] != 0 : part[x] == 2) return false;
  }
  for (Vertex y : sep.sinks) {
    if (y < 0 || y >= n || part[y] < 0) return false;
    if (vertex_sink ? part[y] != 2 : part[y] == 0) return false;
  }

  VertexSet start;
  for (Vertex x : sep.sources)
    if (part[x] == 0) start.push_back(x);
  VertexMask in_w = mask_of(n, sep.W);
  auto reach = outsection(d, start, in_w);
  return reach.size() == sep.W.size();
}

bool validate_witness(const Digraph& f, const Digraph& d,
                      const SubdivisionWitness& w) {
  const int n = d.order();
  if (static_cast<int>(w.branch.size()) != f.order()) return false;
  std::vector<char> used(n, 0);
  for (Vertex b : w.branch) {
    if (b < 0 || b >= n || used[b]) return false;
    used[b] = 1;
  }
  auto arcs = f.arcs();
  if (w.paths.size() != arcs.size()) return false;
  for (size_t i = 0; i < arcs.size(); ++i) {
    const DiPath& p = w.paths[i];
    if (!is_dipath(d, p) || p.length() < 1) return false;
    if (p.source() != w.branch[arcs[i].first] ||
        p.target() != w.branch[arcs[i].second])
      return false;
    for (int j = 1; j < p.length(); ++j) {
      Vertex v = p.vertices[j];
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

std::string to_string(const DiPath& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    os << (i ? " " : "") << p.vertices[i];
  return os.str();
}

}  // namespace subdiv
