#include "subdiv/patterns.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace subdiv {

namespace {

struct Entry {
  const char* name;
  const char* arcs;     // "ab ba ..." over vertices a..d
  const char* degrees;  // per vertex "<in><out>", checked at load
  const char* e1;       // gadget arcs, N_i only
  const char* e2;
};

// Vertices a,b,c,d are 0,1,2,3; the roles map exposes them by letter.
constexpr Entry kFixed[] = {
    {"E1", "ab ba ac ca cd", "22 11 12 10", nullptr, nullptr},
    {"E2", "ab ba ac ca ad bd", "23 12 11 20", nullptr, nullptr},
    {"E3", "ab ba ac ca cd da", "32 11 12 11", nullptr, nullptr},
    {"E4", "ab ba ad ac cd", "13 11 11 20", nullptr, nullptr},
    {"E5", "ca ab cd db cb ba", "21 31 03 11", nullptr, nullptr},
    {"E6", "ba ab bd dc bc ca", "21 13 21 11", nullptr, nullptr},
    {"E7", "ab ba ac cd da db", "22 21 11 12", nullptr, nullptr},
    {"E8", "ab ba ac cd da bd", "22 12 11 21", nullptr, nullptr},
    {"E9", "ab ba ac ca bd dc", "22 12 21 11", nullptr, nullptr},
    {"N1", "ab ba cd dc ac bc", "12 12 31 11", "ab", "cd"},
    {"N2", "ab ba cd dc bc db ca", "21 22 22 12", "ab", "cd"},
    {"N3", "ab ba cd dc bc db ac", "12 22 31 12", "ab", "cd"},
    {"N4", "ab ba cd dc bc bd ac", "12 13 31 21", "ab", "cd"},
    {"N5", "ab ba ac ca ad cd db", "23 21 12 21", "ba", "cd"},
    {"N6", "ab ba ac ca ad bd cd", "23 12 12 30", "ab", "cd"},
    {"N7", "ab ba ca ad cd", "22 11 02 20", "ab", "cd"},
    {"N8", "ab ba ca cd cb bd", "21 22 03 20", "ab", "cd"},
    {"N9", "ab ba dc ca bc db", "21 22 21 02", "ab", "dc"},
    {"O1", "ab ba cd dc ac cb", "12 21 22 11", nullptr, nullptr},
    {"O2", "ab ba ac ca bd cd", "22 12 12 20", nullptr, nullptr},
    {"O3", "ab ba ac ca ad db dc", "23 21 21 12", nullptr, nullptr},
    {"O4", "ab ba ac ad cb cd", "13 21 12 20", nullptr, nullptr},
    {"O5", "ab ba ac ad cd bc", "13 12 21 20", nullptr, nullptr},
    {"Z4", "da db dc ba bc", "20 12 20 03", nullptr, nullptr},
    {"S122", "ab ac cb ad db", "03 30 11 11", nullptr, nullptr},
    {"F3", "da db dc ab bc", "11 21 20 03", nullptr, nullptr},
    {"TT4", "ab ac ad bc bd cd", "03 12 21 30", nullptr, nullptr},
    {"ST4", "ab bc cd da ac bd", "12 12 21 21", nullptr, nullptr},
};

Arc parse_arc(const std::string& s) { return {s[0] - 'a', s[1] - 'a'}; }

Pattern from_entry(const Entry& e) {
  Pattern p;
  p.name = e.name;
  p.graph = Digraph(4);
  std::istringstream in(e.arcs);
  std::string tok;
  while (in >> tok) {
    auto [u, v] = parse_arc(tok);
    p.graph.add_arc(u, v);
  }
  std::istringstream deg(e.degrees);
  for (Vertex v = 0; v < 4; ++v) {
    deg >> tok;
    if (tok[0] - '0' != p.graph.in_degree(v) ||
        tok[1] - '0' != p.graph.out_degree(v))
      throw std::logic_error("pattern " + p.name + " fails degree check");
  }
  for (Vertex v = 0; v < 4; ++v) p.roles[std::string(1, 'a' + v)] = v;
  if (e.e1) {
    Arc a1 = parse_arc(e.e1), a2 = parse_arc(e.e2);
    if (!p.graph.has_arc(a1.first, a1.second) ||
        !p.graph.has_arc(a2.first, a2.second))
      throw std::logic_error("pattern " + p.name + " gadget arcs missing");
    p.gadget_arcs = std::make_pair(a1, a2);
  }
  if (p.name == "Z4" || p.name == "F3") p.roles["centre"] = 3;
  return p;
}

const std::map<std::string, Pattern>& fixed_registry() {
  static const std::map<std::string, Pattern> reg = [] {
    std::map<std::string, Pattern> m;
    for (const auto& e : kFixed) m.emplace(e.name, from_entry(e));
    for (auto p : {wheel(2), wheel(3), symmetric_star(2), symmetric_star(3),
                   superstar(2), superstar(3), directed_cycle(2),
                   directed_cycle(3)})
      m.emplace(p.name, p);
    return m;
  }();
  return reg;
}

}  // namespace

Pattern wheel(int k) {
  if (k < 2) throw std::invalid_argument("wheel needs k >= 2");
  Pattern p;
  p.name = "W" + std::to_string(k);
  p.graph = Digraph(k + 1);
  for (int i = 0; i < k; ++i) {
    p.graph.add_arc(i, (i + 1) % k);
    p.graph.add_arc(k, i);
  }
  p.roles["centre"] = k;
  return p;
}

Pattern symmetric_star(int k) {
  if (k < 1) throw std::invalid_argument("symmetric star needs k >= 1");
  Pattern p;
  p.name = "SS" + std::to_string(k);
  p.graph = Digraph(k + 1);
  for (int i = 1; i <= k; ++i) {
    p.graph.add_arc(0, i);
    p.graph.add_arc(i, 0);
  }
  p.roles["centre"] = 0;
  return p;
}

Pattern superstar(int k) {
  if (k < 2) throw std::invalid_argument("superstar needs k >= 2");
  Pattern p = symmetric_star(k);
  p.name = "SSstar" + std::to_string(k);
  p.graph.add_arc(1, 2);
  return p;
}

Pattern directed_cycle(int k) {
  if (k < 2) throw std::invalid_argument("cycle needs k >= 2");
  Pattern p;
  p.name = "C" + std::to_string(k);
  p.graph = Digraph(k);
  for (int i = 0; i < k; ++i) p.graph.add_arc(i, (i + 1) % k);
  return p;
}

Pattern cylindrical_grid(int k) {
  if (k < 1) throw std::invalid_argument("grid needs k >= 1");
  Pattern p;
  p.name = "grid" + std::to_string(k);
  const int w = 2 * k;
  p.graph = Digraph(k * w);
  auto id = [w](int i, int j) { return i * w + j; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < w; ++j) {
      p.graph.add_arc(id(i, j), id(i, (j + 1) % w));
      if (i + 1 < k) {
        if (j % 2 == 0)
          p.graph.add_arc(id(i, j), id(i + 1, j));
        else
          p.graph.add_arc(id(i + 1, j), id(i, j));
      }
    }
  return p;
}

Pattern registry_get(const std::string& name) {
  const auto& reg = fixed_registry();
  if (auto it = reg.find(name); it != reg.end()) return it->second;
  static const std::regex param("(W|SSstar|SS|C|grid)([0-9]{1,2})");
  std::smatch m;
  if (std::regex_match(name, m, param)) {
    int k = std::stoi(m[2]);
    const std::string kind = m[1];
    if (kind == "W") return wheel(k);
    if (kind == "SSstar") return superstar(k);
    if (kind == "SS") return symmetric_star(k);
    if (kind == "C") return directed_cycle(k);
    return cylindrical_grid(k);
  }
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [n, p] : fixed_registry()) names.push_back(n);
  return names;
}

std::uint16_t arc_mask(const Digraph& f) {
  if (f.order() > 4) throw std::invalid_argument("arc mask needs n <= 4");
  std::uint16_t m = 0;
  for (auto [u, v] : f.arcs()) m |= std::uint16_t(1u << (4 * u + v));
  return m;
}

Digraph from_mask(int n, std::uint16_t mask) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (mask >> (4 * u + v) & 1)) d.add_arc(u, v);
  return d;
}

std::uint16_t canonical_mask(const Digraph& f) {
  const int n = f.order();
  if (n > 4) throw std::invalid_argument("canonical form needs n <= 4");
  auto arcs = f.arcs();
  std::array<int, 4> p{0, 1, 2, 3};
  std::uint16_t best = 0xffff;
  do {
    std::uint16_t m = 0;
    for (auto [u, v] : arcs) m |= std::uint16_t(1u << (4 * p[u] + p[v]));
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return best;
}

std::uint16_t converse_class(const Digraph& f) {
  return std::min(canonical_mask(f), canonical_mask(converse(f)));
}

CanonicalForm canonical_form_4(const Digraph& f) {
  CanonicalForm cf;
  cf.mask = canonical_mask(f);
  const std::uint16_t conv = canonical_mask(converse(f));
  for (const auto& [name, p] : fixed_registry()) {
    if (p.graph.order() != f.order()) continue;
    const std::uint16_t m = canonical_mask(p.graph);
    if (!cf.match && m == cf.mask) cf.match = name;
    if (!cf.converse_match && m == conv) cf.converse_match = name;
  }
  return cf;
}

namespace {

void iso_search(const Digraph& a, const Digraph& b, std::vector<Vertex>& map,
                std::vector<char>& used, int i, bool first_only,
                std::vector<std::vector<Vertex>>& out) {
  const int n = a.order();
  if (i == n) {
    out.push_back(map);
    return;
  }
  for (Vertex t = 0; t < n; ++t) {
    if (used[t] || a.in_degree(i) != b.in_degree(t) ||
        a.out_degree(i) != b.out_degree(t))
      continue;
    bool ok = true;
    for (Vertex j = 0; j < i && ok; ++j) {
      ok = a.has_arc(i, j) == b.has_arc(t, map[j]) &&
           a.has_arc(j, i) == b.has_arc(map[j], t);
    }
    if (!ok) continue;
    map[i] = t;
    used[t] = 1;
    iso_search(a, b, map, used, i + 1, first_only, out);
    used[t] = 0;
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> isomorphisms(const Digraph& a,
                                              const Digraph& b,
                                              bool first_only) {
  std::vector<std::vector<Vertex>> out;
  if (a.order() != b.order() || a.size() != b.size()) return out;
  std::vector<Vertex> map(a.order(), -1);
  std::vector<char> used(a.order(), 0);
  iso_search(a, b, map, used, 0, first_only, out);
  return out;
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  return !isomorphisms(a, b, true).empty();
}

int Spider::order() const {
  int n = 1;
  for (int l : legs) n += std::abs(l);
  return n;
}

Digraph Spider::to_digraph() const {
  Digraph d(order());
  Vertex next = 1;
  for (int l : legs) {
    Vertex prev = 0;
    for (int s = 0; s < std::abs(l); ++s, ++next) {
      if (l > 0)
        d.add_arc(prev, next);
      else
        d.add_arc(next, prev);
      prev = next;
    }
  }
  return d;
}

std::optional<SpiderMatch> as_spider(const Digraph& f) {
  const int n = f.order();
  if (n == 0) return std::nullopt;
  if (f.size() != n - 1 || !two_cycle_graph(f).empty()) return std::nullopt;
  std::vector<std::vector<Vertex>> nb(n);
  for (auto [u, v] : f.arcs()) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  // Connectedness of the underlying tree.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> todo{0};
  seen[0] = 1;
  int count = 1;
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : nb[v])
      if (!seen[w]) seen[w] = 1, ++count, todo.push_back(w);
  }
  if (count != n) return std::nullopt;

  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v)
    if (nb[v].size() >= 3) candidates.push_back(v);
  if (candidates.size() > 1) return std::nullopt;
  if (candidates.empty()) {
    candidates.resize(n);
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  for (Vertex body : candidates) {
    Spider s;
    bool ok = true;
    for (Vertex first : nb[body]) {
      const bool outward = f.has_arc(body, first);
      int len = 1;
      Vertex prev = body, cur = first;
      while (ok) {
        if (nb[cur].size() > 2) {
          ok = false;
          break;
        }
        Vertex nxt = -1;
        for (Vertex w : nb[cur])
          if (w != prev) nxt = w;
        if (nxt < 0) break;
        if (outward != f.has_arc(cur, nxt)) ok = false;
        prev = cur;
        cur = nxt;
        ++len;
      }
      s.legs.push_back(outward ? len : -len);
    }
    if (ok) {
      std::sort(s.legs.begin(), s.legs.end());
      return SpiderMatch{s, body};
    }
  }
  return std::nullopt;
}

}  // namespace subdiv
