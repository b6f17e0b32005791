// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "subdiv/classify.hpp"
#include "subdiv/cli.hpp"
#include "subdiv/detectors.hpp"
#include "subdiv/gadgets.hpp"
#include "subdiv/generate.hpp"
#include "subdiv/io.hpp"
#include "subdiv/menger.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/patterns.hpp"
#include "subdiv/shunt.hpp"

using namespace subdiv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string str(const Digraph& d) {
  std::string s = std::to_string(d.order()) + ":";
  for (auto [u, v] : d.arcs()) s += " " + std::to_string(u) + std::to_string(v);
  return s;
}

// ---------------------------------------------------------------- 1

Outcome classification() {
  std::map<std::uint16_t, Verdict> verdict;
  int inconsistent = 0;
  for (std::uint32_t bits = 0; bits < (1u << 12); ++bits) {
    Digraph f(4);
    int b = 0;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v)
        if (u != v && (bits >> b++ & 1)) f.add_arc(u, v);
    const auto key = converse_class(f);
    const Verdict got = classify4(f).verdict;
    auto [it, fresh] = verdict.emplace(key, got);
    if (!fresh && it->second != got) ++inconsistent;
  }
  std::set<std::uint16_t> open, expected;
  for (auto [k, v] : verdict)
    if (v == Verdict::Open) open.insert(k);
  for (int j = 1; j <= 5; ++j) expected.insert(converse_class(registry_get("O" + std::to_string(j)).graph));
  Outcome o;
  o.pass = inconsistent == 0 && open == expected;
  o.detail = std::to_string(verdict.size()) + " classes, " + std::to_string(open.size()) +
             " open (O1..O5 " + (open == expected ? "exactly" : "MISMATCH") + "), " +
             std::to_string(inconsistent) + " inconsistent labellings";
  return o;
}

// ---------------------------------------------------------------- 2, 3, 4

struct Detector {
  std::string name;
  Digraph f;
  Decider decide;
  int centre_k = 0;  // superstar: also compared centre by centre
};

std::vector<Detector> detectors() {
  std::vector<Detector> ds;
  ds.push_back({"W3", wheel(3).graph, detect_w3});
  ds.push_back({"Z4", registry_get("Z4").graph, detect_z4});
  for (int i = 1; i <= 8; ++i)
    ds.push_back({"E" + std::to_string(i), registry_get("E" + std::to_string(i)).graph,
                  [i](const Digraph& d) { return detect_ei(i, d); }});
  ds.push_back({"E9", registry_get("E9").graph, detect_e9});
  for (int k = 2; k <= 3; ++k)
    ds.push_back({"SS*" + std::to_string(k), superstar(k).graph,
                  [k](const Digraph& d) {
                    for (Vertex v = 0; v < d.order(); ++v)
                      if (detect_superstar(d, v, k)) return true;
                    return false;
                  },
                  k});
  for (int n = 1; n <= 4; ++n)
    for (const Digraph& f : digraph_classes(n))
      if (auto m = as_spider(f)) {
        Spider t = m->spider;
        std::string legs;
        for (int l : t.legs) legs += (legs.empty() ? "" : ",") + std::to_string(l);
        ds.push_back({"spider(" + legs + ")", f, [t](const Digraph& d) { return detect_spider(t, d); }});
      }
  return ds;
}

struct Positive {
  const Detector* det;
  Digraph host;
};

struct Tally {
  long runs = 0, bad = 0, over = 0;
  std::vector<std::string> examples;
};

void compare(const Detector& det, const Digraph& d, const OracleBudget& budget, Tally& t,
             std::vector<Positive>& positives) {
  auto r = brute_force_subdivision(det.f, d, budget);
  ++t.runs;
  if (r.exceeded()) {
    ++t.over;
  } else {
    const bool got = det.decide(d);
    if (got != r.found()) {
      ++t.bad;
      if (t.examples.size() < 3) t.examples.push_back(det.name + " on " + str(d));
    }
    if (r.found()) positives.push_back({&det, d});
  }
  if (det.centre_k) {
    const int k = det.centre_k;
    for (Vertex v = 0; v < d.order(); ++v) {
      std::vector<Vertex> pin(k + 1, -1);
      pin[0] = v;
      auto p = brute_force_subdivision(det.f, d, budget, pin);
      ++t.runs;
      if (p.exceeded()) {
        ++t.over;
        continue;
      }
      if (detect_superstar(d, v, k) != p.found()) {
        ++t.bad;
        if (t.examples.size() < 3)
          t.examples.push_back(det.name + " centre " + std::to_string(v) + " on " + str(d));
      }
    }
  }
}

std::string tally_text(const Tally& t) {
  std::string s = std::to_string(t.runs) + " comparisons, " + std::to_string(t.bad) +
                  " disagreements, " + std::to_string(t.over) + " over budget";
  for (const auto& e : t.examples) s += "; e.g. " + e;
  return s;
}

Outcome exhaustive(const std::vector<Detector>& ds, std::vector<Positive>& positives) {
  std::vector<Digraph> hosts;
  for (int n = 1; n <= 5; ++n)
    for (auto& d : digraph_classes(n)) hosts.push_back(d);
  Tally t;
  const OracleBudget unlimited{5, std::int64_t{1} << 50};
  for (const Detector& det : ds)
    for (const Digraph& d : hosts) compare(det, d, unlimited, t, positives);
  Outcome o;
  o.pass = t.bad == 0 && t.over == 0;
  o.detail = std::to_string(ds.size()) + " detectors x " + std::to_string(hosts.size()) +
             " host classes: " + tally_text(t);
  return o;
}

Outcome randomized(const std::vector<Detector>& ds, std::vector<Positive>& positives) {
  Tally t;
  const OracleBudget budget{8, 20'000'000};
  std::vector<Digraph> hosts;
  for (int n = 6; n <= 8; ++n)
    for (std::uint64_t s = 0; s < 1000; ++s) hosts.push_back(random_digraph(n, 0.3, 7919 * n + s));
  for (const Detector& det : ds)
    for (const Digraph& d : hosts) compare(det, d, budget, t, positives);
  Outcome o;
  const double rate = t.runs ? static_cast<double>(t.over) / static_cast<double>(t.runs) : 0;
  o.pass = t.bad == 0 && rate < 0.01;
  std::ostringstream pct;
  pct.precision(3);
  pct << 100 * rate;
  o.detail = "3000 hosts (n = 6, 7, 8; p = 0.3): " + tally_text(t) + " (" + pct.str() + "%)";
  return o;
}

Outcome witnesses(const std::vector<Positive>& positives) {
  long ok = 0, bad = 0;
  std::string example;
  for (const Positive& p : positives) {
    std::optional<SubdivisionWitness> w;
    try {
      w = find_subdivision(p.det->f, p.host, p.det->decide);
    } catch (const std::exception& e) {
      if (example.empty()) example = p.det->name + " on " + str(p.host) + ": " + e.what();
    }
    if (w && validate_witness(p.det->f, p.host, *w)) {
      ++ok;
    } else {
      ++bad;
      if (example.empty()) example = p.det->name + " on " + str(p.host);
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(ok) + "/" + std::to_string(ok + bad) + " witnesses valid";
  if (!example.empty()) o.detail += "; first failure " + example;
  return o;
}

// ---------------------------------------------------------------- 5

bool disjoint_family(const Digraph& d, const std::vector<DiPath>& ps, Vertex x, Vertex y) {
  std::set<Vertex> inner;
  std::set<std::vector<Vertex>> seen;
  for (const auto& p : ps) {
    if (!is_dipath(d, p) || p.source() != x || p.target() != y) return false;
    if (!seen.insert(p.vertices).second) return false;
    for (int i = 1; i < p.length(); ++i)
      if (!inner.insert(p.vertices[i]).second) return false;
  }
  return true;
}

Outcome menger() {
  long checks = 0, bad = 0;
  for (int n = 2; n <= 7; ++n)
    for (std::uint64_t s = 0; s < 500; ++s) {
      Digraph d = random_digraph(n, 0.3, 104729 * n + s);
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
          if (x == y) continue;
          const int best = brute::max_internally_disjoint(d, x, y);
          for (int k = 0; k <= best; ++k) {
            auto r = internally_disjoint(d, x, y, k);
            ++checks;
            const bool good = k + 1 <= best
                ? r.linked() && r.paths.size() == static_cast<size_t>(k + 1) &&
                      disjoint_family(d, r.paths, x, y)
                : !r.linked() && validate_separation(d, *r.separation);
            bad += !good;
          }
        }
      if (n < 4) continue;
      const VertexSet xs{0, 1}, ys{n - 2, n - 1};
      const int sets = brute::max_disjoint_set(d, xs, ys);
      auto cut = disjoint_set_to_set(d, xs, ys, sets);
      bad += cut.linked() || !validate_separation(d, *cut.separation);
      if (sets > 0) bad += !disjoint_set_to_set(d, xs, ys, sets - 1).linked();
      VertexSet rest;
      for (Vertex v = 1; v < n; ++v) rest.push_back(v);
      const int ind = brute::max_independent_from(d, 0, rest);
      auto icut = independent_from(d, 0, rest, ind);
      bad += icut.linked() || !validate_separation(d, *icut.separation);
      if (ind > 0) bad += !independent_from(d, 0, rest, ind - 1).linked();
      checks += 2;
    }
  Outcome o;
  o.pass = bad == 0;
  o.detail = "3000 hosts (n = 2..7), " + std::to_string(checks) + " (pair, k) checks, " +
             std::to_string(bad) + " failures";
  return o;
}

// ---------------------------------------------------------------- 6

Outcome gadgets() {
  long agree = 0, disagree = 0, over = 0, yes = 0;
  for (int i = 1; i <= 9; ++i)
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto inst = random_linkage_instance(4 + static_cast<int>(s % 3), 0.5, 1000 * i + s);
      try {
        auto r = gadget_equivalence_check(i, inst);
        (r.agree ? agree : disagree)++;
        yes += r.linkage;
      } catch (const BudgetError&) {
        ++over;
      }
    }
  Outcome o;
  o.pass = disagree == 0 && agree > 0;
  o.detail = "N1..N9 x 20 instances (gadget order <= 10): " + std::to_string(agree) + " agree, " +
             std::to_string(disagree) + " disagree, " + std::to_string(over) +
             " over budget; " + std::to_string(yes) + " linkage-yes";
  return o;
}

// ---------------------------------------------------------------- 7

// Arcs among terminals 0..3 that no shunt can use: s1s2, s2s1, t1t2, t2t1, t->s.
bool inert(Vertex a, Vertex b) {
  if (a >= 4 || b >= 4) return false;
  const bool sa = a < 2, sb = b < 2;
  return sa == sb || (!sa && sb);
}

Outcome shunts() {
  long checks = 0, bad = 0, found = 0;
  auto check = [&](const Digraph& d, Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
    ++checks;
    const bool got = shunt(d, s1, s2, t1, t2).has_value();
    found += got;
    bad += got != brute::has_shunt(d, s1, s2, t1, t2);
  };
  // Every class with n <= 5, every choice of terminals.
  for (int n = 4; n <= 5; ++n)
    for (const Digraph& d : digraph_classes(n))
      for (Vertex s1 = 0; s1 < n; ++s1)
        for (Vertex s2 = s1 + 1; s2 < n; ++s2)
          for (Vertex t1 = 0; t1 < n; ++t1)
            for (Vertex t2 = t1 + 1; t2 < n; ++t2)
              if (t1 != s1 && t1 != s2 && t2 != s1 && t2 != s2) check(d, s1, s2, t1, t2);
  // Every labelled host on 6 vertices with terminals 0..3; inert arcs random.
  std::vector<Arc> live, dead;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      if (a != b) (inert(a, b) ? dead : live).emplace_back(a, b);
  std::mt19937_64 g(5);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << live.size()); ++m) {
    Digraph d(6);
    for (size_t i = 0; i < live.size(); ++i)
      if (m >> i & 1) d.add_arc(live[i].first, live[i].second);
    for (auto [a, b] : dead)
      if (g() & 1) d.add_arc(a, b);
    check(d, 0, 1, 2, 3);
  }
  for (std::uint64_t s = 0; s < 500; ++s) check(random_digraph(7, 0.35, 31 * s + 3), 0, 1, 2, 3);
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(checks) + " hosts (classes n <= 5 with all terminal choices, all " +
             "labelled n = 6, 500 random n = 7): " + std::to_string(found) + " shunts, " +
             std::to_string(bad) + " disagreements";
  return o;
}

// ---------------------------------------------------------------- 8

Outcome determinism() {
  auto dir = std::filesystem::temp_directory_path() / "subdiv_acceptance";
  std::filesystem::create_directories(dir);
  auto file = [&](const std::string& name, const std::string& body) {
    auto p = (dir / name).string();
    std::ofstream(p) << body;
    return p;
  };
  const auto host = file("host.txt", format_edge_list(random_digraph(7, 0.4, 12)));
  const auto inst = file("inst.txt", format_instance(random_linkage_instance(6, 0.5, 3)));
  const std::vector<std::vector<std::string>> commands{
      {"decide", "W3", host},
      {"decide", "E9", host},
      {"decide", "TT4", host},
      {"decide", "N3", host, "--oracle"},
      {"find", "Z4", host},
      {"find", "E7", host},
      {"find", "SSstar3", host},
      {"classify", "O3"},
      {"classify", "E5"},
      {"crosscheck", "--nmax", "4", "--samples", "20", "--seed", "9"},
      {"gadget", "5", inst},
      {"gen", "--n", "9", "--p", "0.3", "--seed", "77"},
      {"gen", "--n", "8", "--seed", "4", "--linkage"},
  };
  int same = 0;
  std::string differing;
  for (const auto& c : commands) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = run_cli(c, o1, e1), c2 = run_cli(c, o2, e2);
    if (c1 == c2 && o1.str() == o2.str() && e1.str() == e2.str())
      ++same;
    else if (differing.empty())
      differing = c[0] + " " + c[1];
  }
  Outcome o;
  o.pass = same == static_cast<int>(commands.size());
  o.detail = std::to_string(same) + "/" + std::to_string(commands.size()) +
             " commands byte-identical on repeat";
  if (!differing.empty()) o.detail += "; first difference: " + differing;
  return o;
}

}  // namespace

int main() {
  const auto ds = detectors();
  std::vector<Positive> positives;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classification completeness", classification},
      {"oracle equivalence, exhaustive n <= 5", [&] { return exhaustive(ds, positives); }},
      {"oracle equivalence, random n = 6..8", [&] { return randomized(ds, positives); }},
      {"witness soundness", [&] { return witnesses(positives); }},
      {"Menger correctness", menger},
      {"gadget equivalence", gadgets},
      {"shunt equivalence", shunts},
      {"determinism", determinism},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].second();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (i == 0 && secs >= 10) {
      o.pass = false;
      o.detail += "; too slow";
    }
    all = all && o.pass;
    std::printf("criterion %zu %-40s %s  (%s; %.1f s)\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
