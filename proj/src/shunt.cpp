#include "subdiv/shunt.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "subdiv/menger.hpp"

namespace subdiv {

bool validate_shunt(const Digraph& d, const Shunt& s, const VertexSet& S,
                    const VertexSet& T) {
  if (!is_dipath(d, s.P) || !is_dipath(d, s.Q) || !is_dipath(d, s.R)) return false;
  if (s.R.length() < 2) return false;
  std::vector<int> owner(d.order(), 0);
  auto mark = [&](const std::vector<Vertex>& vs, int tag) {
    for (Vertex v : vs) {
      if (owner[v]) return false;
      owner[v] = tag;
    }
    return true;
  };
  if (!mark(s.P.vertices, 1) || !mark(s.Q.vertices, 2)) return false;
  if (owner[s.R.source()] != 1 || owner[s.R.target()] != 2) return false;
  std::vector<Vertex> inner(s.R.vertices.begin() + 1, s.R.vertices.end() - 1);
  if (!mark(inner, 3)) return false;
  if (!S.empty()) {
    VertexSet a{std::min(s.P.source(), s.Q.source()), std::max(s.P.source(), s.Q.source())};
    if (a != S) return false;
  }
  if (!T.empty()) {
    VertexSet b{std::min(s.P.target(), s.Q.target()), std::max(s.P.target(), s.Q.target())};
    if (b != T) return false;
  }
  return true;
}

namespace {

using Seq = std::vector<Vertex>;

Seq seg(const Seq& x, int i, int j) { return Seq(x.begin() + i, x.begin() + j + 1); }

Seq join(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& p : parts)
    for (Vertex v : p)
      if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

class Search {
 public:
  Search(const Digraph& d, Seq p, Seq q) : d_(d), p_(std::move(p)), q_(std::move(q)) {
    const int n = d.order();
    pos_p_.assign(n, -1);
    pos_q_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(p_.size()); ++i) pos_p_[p_[i]] = i;
    for (int i = 0; i < static_cast<int>(q_.size()); ++i) pos_q_[q_[i]] = i;
    in_o_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) in_o_[v] = pos_p_[v] < 0 && pos_q_[v] < 0;
  }

  std::optional<Shunt> run() {
    if (auto s = paths_between()) return s;
    if (auto s = arc_bypass()) return s;
    return crossings();
  }

 private:
  // Dipath from a vertex of `from` to a vertex of `to` with interior in O;
  // single arcs only when allow_arc. from and to must be disjoint.
  std::optional<Seq> via_o(const Seq& from, const Seq& to, bool allow_arc) const {
    const int n = d_.order();
    std::vector<char> end(n, 0);
    for (Vertex v : to) end[v] = 1;
    if (allow_arc)
      for (Vertex a : from)
        for (Vertex b : d_.out(a))
          if (end[b]) return Seq{a, b};
    std::vector<Vertex> parent(n, -1);
    std::deque<Vertex> todo;
    for (Vertex a : from)
      for (Vertex o : d_.out(a))
        if (in_o_[o] && parent[o] < 0) {
          parent[o] = a;
          todo.push_back(o);
        }
    while (!todo.empty()) {
      Vertex o = todo.front();
      todo.pop_front();
      for (Vertex b : d_.out(o)) {
        if (end[b]) {
          Seq path{b};
          for (Vertex c = o; ; c = parent[c]) {
            path.push_back(c);
            if (!in_o_[c]) break;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (in_o_[b] && parent[b] < 0) {
          parent[b] = o;
          todo.push_back(b);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Shunt> make(Seq p, Seq q, Seq r) const {
    Shunt s{DiPath{std::move(p)}, DiPath{std::move(q)}, DiPath{std::move(r)}};
    if (!validate_shunt(d_, s)) throw std::logic_error("shunt: constructed certificate is invalid");
    return s;
  }

  std::optional<Shunt> paths_between() const {
    if (auto r = via_o(p_, q_, false)) return make(p_, q_, *r);
    if (auto r = via_o(q_, p_, false)) return make(q_, p_, *r);
    return std::nullopt;
  }

  const std::vector<int>& pos(const Seq& x) const { return &x == &p_ ? pos_p_ : pos_q_; }

  // Bypass of position i on x: a dipath from x[..i-1] to x[i+1..].
  std::optional<Seq> bypass(const Seq& x, int lo, int i, int hi) const {
    if (i <= lo || i >= hi) return std::nullopt;
    return via_o(seg(x, lo, i - 1), seg(x, i + 1, hi), true);
  }

  // x with the part strictly between the ends of b replaced by b.
  Seq reroute(const Seq& x, const Seq& b) const {
    const auto& px = pos(x);
    return join({seg(x, 0, px[b.front()]), b, seg(x, px[b.back()], static_cast<int>(x.size()) - 1)});
  }

  std::optional<Shunt> arc_bypass() const {
    for (int side = 0; side < 2; ++side) {
      const Seq& x = side == 0 ? p_ : q_;
      const Seq& y = side == 0 ? q_ : p_;
      const auto& px = pos(x);
      const auto& py = pos(y);
      const int xe = static_cast<int>(x.size()) - 1, ye = static_cast<int>(y.size()) - 1;
      for (Vertex a : x)
        for (Vertex b : d_.out(a)) {
          if (py[b] < 0) continue;
          if (auto bp = bypass(x, 0, px[a], xe))
            return make(reroute(x, *bp), y, join({seg(x, px[bp->front()], px[a]), Seq{b}}));
          if (auto bp = bypass(y, 0, py[b], ye))
            return make(x, reroute(y, *bp), join({Seq{a}, seg(y, py[b], py[bp->back()])}));
        }
    }
    return std::nullopt;
  }

  std::optional<Shunt> crossings() const {
    const int pe = static_cast<int>(p_.size()) - 1, qe = static_cast<int>(q_.size()) - 1;
    for (Vertex u : p_)
      for (Vertex v : d_.out(u)) {
        if (pos_q_[v] < 0) continue;
        for (Vertex u2 : q_)
          for (Vertex v2 : d_.out(u2)) {
            if (pos_p_[v2] < 0) continue;
            const int iu = pos_p_[u], iv2 = pos_p_[v2], iu2 = pos_q_[u2], iv = pos_q_[v];
            if (iu >= iv2 || iu2 >= iv) continue;
            // a leaves P at u for Q, b leaves Q at u2 for P.
            const Seq a = join({seg(p_, 0, iu), seg(q_, iv, qe)});
            const Seq b = join({seg(q_, 0, iu2), seg(p_, iv2, pe)});
            if (iv2 - iu >= 2) return make(a, b, seg(p_, iu, iv2));
            if (iv - iu2 >= 2) return make(b, a, seg(q_, iu2, iv));
            if (auto s = tight(u, v, u2, v2, a, b)) return s;
          }
      }
    return std::nullopt;
  }

  std::optional<Shunt> tight(Vertex u, Vertex v, Vertex u2, Vertex v2, const Seq& a,
                             const Seq& b) const {
    const int pe = static_cast<int>(p_.size()) - 1, qe = static_cast<int>(q_.size()) - 1;
    const int iu = pos_p_[u], iv2 = pos_p_[v2], iu2 = pos_q_[u2], iv = pos_q_[v];
    if (auto f = via_o({u}, {v2}, false)) return make(a, b, *f);
    if (auto f = via_o({u2}, {v}, false)) return make(b, a, *f);
    if (auto r = via_o(seg(p_, iv2, pe), seg(p_, 0, iu), false)) return make(b, a, *r);
    if (auto r = via_o(seg(q_, iv, qe), seg(q_, 0, iu2), false)) return make(a, b, *r);

    // Backward arcs w -> x on P, then a bypass of x or of w on its side.
    for (int iw = iv2; iw <= pe; ++iw)
      for (Vertex x : d_.out(p_[iw])) {
        const int ix = pos_p_[x];
        if (ix < 0 || ix > iu) continue;
        const Vertex w = p_[iw];
        if (auto bp = bypass(p_, 0, ix, iu)) {
          Seq a2 = join({seg(p_, 0, pos_p_[bp->front()]), *bp, seg(p_, pos_p_[bp->back()], iu),
                         seg(q_, iv, qe)});
          return make(b, a2, join({Seq{w}, seg(p_, ix, pos_p_[bp->back()])}));
        }
        if (auto bp = bypass(p_, iv2, iw, pe)) {
          Seq b2 = join({seg(q_, 0, iu2), seg(p_, iv2, pos_p_[bp->front()]), *bp,
                         seg(p_, pos_p_[bp->back()], pe)});
          return make(b2, a, join({seg(p_, pos_p_[bp->front()], iw), Seq{x}}));
        }
      }
    for (int iw = iv; iw <= qe; ++iw)
      for (Vertex x : d_.out(q_[iw])) {
        const int ix = pos_q_[x];
        if (ix < 0 || ix > iu2) continue;
        const Vertex w = q_[iw];
        if (auto bp = bypass(q_, 0, ix, iu2)) {
          Seq b2 = join({seg(q_, 0, pos_q_[bp->front()]), *bp, seg(q_, pos_q_[bp->back()], iu2),
                         seg(p_, iv2, pe)});
          return make(a, b2, join({Seq{w}, seg(q_, ix, pos_q_[bp->back()])}));
        }
        if (auto bp = bypass(q_, iv, iw, qe)) {
          Seq a2 = join({seg(p_, 0, iu), seg(q_, iv, pos_q_[bp->front()]), *bp,
                         seg(q_, pos_q_[bp->back()], qe)});
          return make(a2, b, join({seg(q_, pos_q_[bp->front()], iw), Seq{x}}));
        }
      }
    return std::nullopt;
  }

  const Digraph& d_;
  Seq p_, q_;
  std::vector<int> pos_p_, pos_q_;
  std::vector<char> in_o_;
};

}  // namespace

std::optional<Shunt> shunt(const Digraph& d, Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
  const Vertex t[4] = {s1, s2, t1, t2};
  for (int i = 0; i < 4; ++i) {
    if (t[i] < 0 || t[i] >= d.order()) throw std::invalid_argument("shunt: vertex out of range");
    for (int j = i + 1; j < 4; ++j)
      if (t[i] == t[j]) throw std::invalid_argument("shunt: vertices must be distinct");
  }
  Digraph h = d;
  if (h.has_arc(s1, s2)) h.remove_arc(s1, s2);
  if (h.has_arc(s2, s1)) h.remove_arc(s2, s1);
  VertexSet S{std::min(s1, s2), std::max(s1, s2)}, T{std::min(t1, t2), std::max(t1, t2)};
  auto link = disjoint_set_to_set(h, S, T, 1);
  if (!link.linked()) return std::nullopt;
  auto found = Search(h, link.paths[0].vertices, link.paths[1].vertices).run();
  if (found && !validate_shunt(d, *found, S, T))
    throw std::logic_error("shunt: certificate has wrong terminals");
  return found;
}

}  // namespace subdiv
