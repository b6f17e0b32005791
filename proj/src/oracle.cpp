#include "subdiv/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subdiv {

namespace {

struct BudgetHit {};

class Search {
 public:
  Search(const Digraph& f, const Digraph& d, const OracleBudget& budget,
         const std::vector<std::vector<Vertex>>& candidates)
      : f_(f), d_(d), budget_(budget), cand_(candidates), arcs_(f.arcs()) {
    branch_.assign(f.order(), -1);
    used_.assign(d.order(), 0);
    is_branch_.assign(d.order(), 0);
    paths_.resize(arcs_.size());
    order_.resize(f.order());
    std::iota(order_.begin(), order_.end(), 0);
    // Most constrained F-vertices first.
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      auto key = [&](Vertex v) {
        return std::make_pair(cand_[v].size(),
                              -(f.in_degree(v) + f.out_degree(v)));
      };
      return key(a) < key(b);
    });
  }

  bool run() { return place(0); }
  std::int64_t steps() const { return steps_; }

  SubdivisionWitness witness() const {
    SubdivisionWitness w;
    w.branch = branch_;
    w.paths = paths_;
    return w;
  }

 private:
  void tick() {
    if (++steps_ > budget_.max_steps) throw BudgetHit{};
  }

  bool place(size_t i) {
    if (i == order_.size()) return route_all();
    const Vertex a = order_[i];
    for (Vertex v : cand_[a]) {
      tick();
      if (is_branch_[v]) continue;
      if (d_.out_degree(v) < f_.out_degree(a) || d_.in_degree(v) < f_.in_degree(a))
        continue;
      branch_[a] = v;
      is_branch_[v] = 1;
      if (place(i + 1)) return true;
      is_branch_[v] = 0;
      branch_[a] = -1;
    }
    return false;
  }

  // Blocked vertices for a path: used internals and every branch vertex.
  bool blocked(Vertex v) const { return used_[v] || is_branch_[v]; }

  bool connectable(size_t arc) const {
    const Vertex s = branch_[arcs_[arc].first], t = branch_[arcs_[arc].second];
    if (d_.has_arc(s, t)) return true;
    std::vector<char> seen(d_.order(), 0);
    std::vector<Vertex> todo;
    for (Vertex w : d_.out(s))
      if (!blocked(w)) seen[w] = 1, todo.push_back(w);
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : d_.out(v)) {
        if (w == t) return true;
        if (!blocked(w) && !seen[w]) seen[w] = 1, todo.push_back(w);
      }
    }
    return false;
  }

  // Number of candidate paths for an arc, capped.
  long count_paths(size_t arc, long cap) {
    const Vertex s = branch_[arcs_[arc].first], t = branch_[arcs_[arc].second];
    long count = 0;
    std::vector<char> on(d_.order(), 0);
    auto go = [&](auto&& self, Vertex v) -> void {
      for (Vertex w : d_.out(v)) {
        if (count >= cap) return;
        tick();
        if (w == t) {
          ++count;
          continue;
        }
        if (blocked(w) || on[w]) continue;
        on[w] = 1;
        self(self, w);
        on[w] = 0;
      }
    };
    go(go, s);
    return count;
  }

  bool route_all() {
    std::vector<std::pair<long, size_t>> keyed;
    for (size_t i = 0; i < arcs_.size(); ++i) {
      long c = count_paths(i, 64);
      if (c == 0) return false;
      keyed.emplace_back(c, i);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    arc_order_.clear();
    for (auto [c, i] : keyed) arc_order_.push_back(i);
    return route(0);
  }

  bool route(size_t j) {
    if (j == arc_order_.size()) return true;
    for (size_t q = j; q < arc_order_.size(); ++q)
      if (!connectable(arc_order_[q])) return false;
    const size_t arc = arc_order_[j];
    const Vertex s = branch_[arcs_[arc].first], t = branch_[arcs_[arc].second];
    std::vector<Vertex> cur{s};
    return extend(j, t, cur);
  }

  bool extend(size_t j, Vertex t, std::vector<Vertex>& cur) {
    const Vertex v = cur.back();
    for (Vertex w : d_.out(v)) {
      tick();
      if (w == t) {
        cur.push_back(t);
        paths_[arc_order_[j]] = DiPath{cur};
        if (route(j + 1)) return true;
        cur.pop_back();
        continue;
      }
      if (blocked(w)) continue;
      used_[w] = 1;
      cur.push_back(w);
      if (extend(j, t, cur)) return true;
      cur.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Digraph& f_;
  const Digraph& d_;
  OracleBudget budget_;
  std::vector<std::vector<Vertex>> cand_;
  std::vector<Arc> arcs_;
  std::vector<Vertex> branch_, order_;
  std::vector<size_t> arc_order_;
  std::vector<char> used_, is_branch_;
  std::vector<DiPath> paths_;
  std::int64_t steps_ = 0;
};

}  // namespace

OracleResult brute_force_subdivision_among(
    const Digraph& f, const Digraph& d, const OracleBudget& budget,
    const std::vector<std::vector<Vertex>>& candidates) {
  if (static_cast<int>(candidates.size()) != f.order())
    throw std::invalid_argument("candidate lists do not match pattern order");
  OracleResult res;
  if (d.order() > budget.max_n) {
    res.status = OracleStatus::BudgetExceeded;
    return res;
  }
  Search s(f, d, budget, candidates);
  try {
    if (s.run()) {
      res.status = OracleStatus::Found;
      res.witness = s.witness();
    }
  } catch (const BudgetHit&) {
    res.status = OracleStatus::BudgetExceeded;
  }
  res.steps = s.steps();
  return res;
}

OracleResult brute_force_subdivision(const Digraph& f, const Digraph& d,
                                     const OracleBudget& budget,
                                     const std::vector<Vertex>& pinned) {
  if (!pinned.empty() && static_cast<int>(pinned.size()) != f.order())
    throw std::invalid_argument("pinned map does not match pattern order");
  std::vector<Vertex> all(d.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<Vertex>> cand(f.order(), all);
  for (size_t a = 0; a < pinned.size(); ++a)
    if (pinned[a] >= 0) {
      if (pinned[a] >= d.order())
        throw std::invalid_argument("pinned vertex out of range");
      cand[a] = {pinned[a]};
    }
  return brute_force_subdivision_among(f, d, budget, cand);
}

LinkageResult brute_force_2_linkage(const Digraph& d, Vertex x1, Vertex x2,
                                    Vertex y1, Vertex y2,
                                    const OracleBudget& budget) {
  const std::vector<Vertex> t{x1, x2, y1, y2};
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= d.order())
      throw std::invalid_argument("linkage terminal out of range");
    for (size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) throw std::invalid_argument("linkage terminals not distinct");
  }
  LinkageResult res;
  if (d.order() > budget.max_n) {
    res.status = OracleStatus::BudgetExceeded;
    return res;
  }
  std::int64_t steps = 0;
  std::vector<char> used(d.order(), 0);
  used[x1] = used[x2] = used[y1] = used[y2] = 1;
  std::vector<Vertex> p1{x1}, p2{x2};

  auto second = [&](auto&& self) -> bool {
    Vertex v = p2.back();
    for (Vertex w : d.out(v)) {
      if (++steps > budget.max_steps) throw BudgetHit{};
      if (w == y2) return true;
      if (used[w]) continue;
      used[w] = 1;
      p2.push_back(w);
      if (self(self)) return true;
      p2.pop_back();
      used[w] = 0;
    }
    return false;
  };
  auto first = [&](auto&& self) -> bool {
    Vertex v = p1.back();
    for (Vertex w : d.out(v)) {
      if (++steps > budget.max_steps) throw BudgetHit{};
      if (w == y1) {
        if (second(second)) {
          p1.push_back(y1);
          return true;
        }
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      p1.push_back(w);
      if (self(self)) return true;
      p1.pop_back();
      used[w] = 0;
    }
    return false;
  };
  try {
    if (first(first)) {
      p2.push_back(y2);
      res.status = OracleStatus::Found;
      res.paths = std::make_pair(DiPath{p1}, DiPath{p2});
    }
  } catch (const BudgetHit&) {
    res.status = OracleStatus::BudgetExceeded;
  }
  return res;
}

}  // namespace subdiv
