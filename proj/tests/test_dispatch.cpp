#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "subdiv/classify.hpp"
#include "subdiv/dispatch.hpp"
#include "subdiv/generate.hpp"

using namespace subdiv;

namespace {

bool oracle(const Digraph& f, const Digraph& d) {
  auto r = brute_force_subdivision(f, d, OracleBudget{12, 2'000'000'000});
  REQUIRE_FALSE(r.exceeded());
  return r.found();
}

std::vector<Digraph> hosts() {
  std::vector<Digraph> all;
  for (int k = 1; k <= 4; ++k)
    for (auto& d : digraph_classes(k)) all.push_back(d);
  auto five = digraph_classes(5);
  for (size_t i = 0; i < five.size(); i += 7) all.push_back(five[i]);
  std::mt19937_64 g(17);
  for (int i = 0; i < 40; ++i) all.push_back(random_digraph(6, 0.3, g()));
  return all;
}

std::string message_of(const Digraph& f) {
  try {
    dispatch_detect(f, Digraph(4));
  } catch (const DispatchError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every tractable 4-vertex pattern is dispatched and agrees with the oracle") {
  const auto hs = hosts();
  int by_detector = 0, by_oracle = 0;
  for (const Digraph& f : digraph_classes(4)) {
    if (classify4(f).verdict != Verdict::Tractable) continue;
    const bool routed = route_for(f).has_value();
    (routed ? by_detector : by_oracle)++;
    for (const Digraph& d : hs) {
      auto r = dispatch_detect(f, d);
      CHECK(r.desk_scale == !routed);
      std::string arcs;
      for (auto [u, v] : f.arcs()) arcs += std::to_string(u) + std::to_string(v) + " ";
      INFO("pattern " << arcs << " via " << r.method);
      CHECK(r.found() == oracle(f, d));
    }
  }
  MESSAGE("tractable 4-vertex classes: " << by_detector << " by detector, " << by_oracle
                                         << " by exhaustive search");
  CHECK(by_detector > by_oracle);
}

TEST_CASE("larger composite patterns route to detectors") {
  // Triangle plus a disjoint dipath of length 2.
  Digraph tri_path(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}});
  // SS2 with a dipath of length 2 entering its centre.
  Digraph star_tail(5, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {4, 3}, {3, 0}});
  // W2 with an out-arc at a rim vertex, conversed.
  Digraph w2_arc = converse(Digraph(4, {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 3}}));
  std::vector<Digraph> fs{tri_path, star_tail, w2_arc, symmetric_star(3).graph,
                          superstar(3).graph, Spider{{2, -1, 1}}.to_digraph()};
  std::mt19937_64 g(5);
  for (const Digraph& f : fs) {
    auto r = route_for(f);
    REQUIRE(r);
    INFO(r->method);
    for (int i = 0; i < 60; ++i) {
      Digraph d = random_digraph(6 + static_cast<int>(g() % 2), 0.35, g());
      CHECK(r->decide(d) == oracle(f, d));
    }
  }
  CHECK(route_for(tri_path)->method.find("plus disjoint") != std::string::npos);
  CHECK(route_for(star_tail)->method.find("glued to SS2 centre") != std::string::npos);
}

TEST_CASE("rooted routes") {
  auto centre = rooted_route_for(wheel(2).graph, 2);
  REQUIRE(centre);
  CHECK(centre->method == "W2 centre");
  auto rim = rooted_route_for(wheel(2).graph, 0);
  REQUIRE(rim);
  CHECK(rim->method == "W2 rim");
  auto conv = rooted_route_for(converse(wheel(2).graph), 2);
  REQUIRE(conv);
  CHECK(conv->method == "W2 centre (converse)");
  CHECK_FALSE(rooted_route_for(superstar(2).graph, 1));
}

TEST_CASE("gating and messages") {
  const Digraph big_two_cycle(4, {{0, 1}, {1, 0}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  REQUIRE(classify4(big_two_cycle).verdict == Verdict::NPComplete);
  const std::string m = message_of(big_two_cycle);
  CHECK(m.find("NP-complete") != std::string::npos);
  CHECK(m.find("use --oracle") != std::string::npos);
  DispatchOptions opt;
  opt.allow_oracle = true;
  auto r = dispatch_detect(big_two_cycle, registry_get("E1").graph, opt);
  CHECK(r.desk_scale);

  for (const Digraph& f : digraph_classes(4))
    if (classify4(f).verdict == Verdict::Open) {
      CHECK(message_of(f).find("open") != std::string::npos);
      break;
    }

  CHECK(message_of(directed_cycle(5).graph) == "no polynomial detector for this pattern; use --oracle");
  opt.budget.max_n = 3;
  auto over = dispatch_detect(directed_cycle(5).graph, directed_cycle(6).graph, opt);
  CHECK(over.status == OracleStatus::BudgetExceeded);
  CHECK_FALSE(over.found());
}

TEST_CASE("witnesses from dispatch are valid") {
  DispatchOptions opt;
  opt.want_witness = true;
  std::mt19937_64 g(9);
  for (const std::string name : {"W3", "Z4", "E5", "E9", "TT4"}) {
    const Digraph f = registry_get(name).graph;
    for (int i = 0; i < 15; ++i) {
      Digraph d = random_digraph(6, 0.45, g());
      auto r = dispatch_detect(f, d, opt);
      CHECK(r.found() == r.witness.has_value());
      if (r.witness) CHECK(validate_witness(f, d, *r.witness));
    }
  }
}
