#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subdiv/gadgets.hpp"
#include "subdiv/patterns.hpp"

using namespace subdiv;

namespace {

LinkageInstance straight() {
  return {Digraph(4, {{0, 2}, {1, 3}}), 0, 1, 2, 3};
}

LinkageInstance crossed() {
  return {Digraph(4, {{0, 3}, {1, 2}}), 0, 1, 2, 3};
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK(validate_instance(straight()));
  CHECK(validate_instance({Digraph(4), 0, 1, 2, 3}));
  CHECK(instance_problem({Digraph(4, {{2, 0}}), 0, 1, 2, 3}) == "x1 and x2 must be sources");
  CHECK(instance_problem({Digraph(4, {{2, 1}}), 0, 1, 2, 3}) == "x1 and x2 must be sources");
  CHECK(instance_problem({Digraph(4), 0, 0, 2, 3}) == "terminals not distinct");
  Digraph big(8, {{0, 4}, {1, 4}, {5, 4}, {4, 2}});
  CHECK(instance_problem({big, 0, 1, 2, 3}) == "vertex 4 is big");
}

TEST_CASE("putting an instance on two arcs") {
  const Pattern n1 = registry_get("N1");
  auto [e1, e2] = *n1.gadget_arcs;
  const Digraph g = put_on_arcs(n1.graph, e1, e2, straight());
  CHECK(g.order() == 8);
  CHECK(g.size() == n1.graph.size() - 2 + 2 + 4);
  for (auto [u, v] : n1.graph.arcs())
    CHECK(g.has_arc(u, v) == (Arc{u, v} != e1 && Arc{u, v} != e2));
  CHECK(g.has_arc(4, 6));
  CHECK(g.has_arc(5, 7));
  CHECK(g.has_arc(e1.first, 4));
  CHECK(g.has_arc(6, e1.second));
  CHECK(g.has_arc(e2.first, 5));
  CHECK(g.has_arc(7, e2.second));
  CHECK(brute_force_subdivision(n1.graph, g).found());
  CHECK_FALSE(brute_force_subdivision(n1.graph, put_on_arcs(n1.graph, e1, e2, crossed())).found());
  CHECK_THROWS_AS(put_on_arcs(n1.graph, e1, e1, straight()), std::invalid_argument);
  CHECK_THROWS_AS(put_on_arcs(n1.graph, e1, {3, 0}, straight()), std::invalid_argument);
  CHECK_THROWS_AS(put_on_arcs(n1.graph, e1, e2, {Digraph(4, {{2, 0}}), 0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("gadget equivalence on hand-made instances") {
  for (int i = 1; i <= 9; ++i) {
    auto yes = gadget_equivalence_check(i, straight());
    CHECK(yes.linkage);
    CHECK(yes.agree);
    auto no = gadget_equivalence_check(i, crossed());
    CHECK_FALSE(no.linkage);
    CHECK(no.agree);
  }
  CHECK_THROWS_AS(gadget_equivalence_check(0, straight()), std::invalid_argument);
  CHECK_THROWS_AS(gadget_equivalence_check(10, straight()), std::invalid_argument);
  CHECK_THROWS_AS(gadget_equivalence_check(1, straight(), OracleBudget{10, 1}), BudgetError);
}

TEST_CASE("random linkage instances") {
  auto empty = random_linkage_instance(4, 0, 1);
  CHECK(empty.d.size() == 0);
  CHECK(validate_instance(empty));
  CHECK(random_linkage_instance(7, 0.4, 99).d == random_linkage_instance(7, 0.4, 99).d);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    auto inst = random_linkage_instance(4 + static_cast<int>(s % 7), 0.2 + 0.1 * (s % 5), s);
    CHECK(validate_instance(inst));
  }
  CHECK_THROWS_AS(random_linkage_instance(3, 0.5, 1), std::invalid_argument);
}

TEST_CASE("gadget equivalence on random instances") {
  int yes = 0, no = 0;
  for (int i = 1; i <= 9; ++i)
    for (std::uint64_t s = 0; s < 12; ++s) {
      auto inst = random_linkage_instance(5 + static_cast<int>(s % 2), 0.5, 100 * i + s);
      auto r = gadget_equivalence_check(i, inst);
      INFO("N" << i << " seed " << s);
      CHECK(r.agree);
      (r.linkage ? yes : no)++;
    }
  CHECK(yes > 0);
  CHECK(no > 0);
}
