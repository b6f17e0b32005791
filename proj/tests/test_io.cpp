#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "subdiv/detectors.hpp"
#include "subdiv/generate.hpp"
#include "subdiv/io.hpp"
#include "subdiv/patterns.hpp"
#include "subdiv/tripod.hpp"

using namespace subdiv;

namespace {

Digraph parse(const std::string& s) {
  std::istringstream in(s);
  return parse_edge_list(in);
}

std::string error_of(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("edge lists") {
  Digraph d = parse("3 2\n0 1\n1 2\n");
  CHECK(d == Digraph(3, {{0, 1}, {1, 2}}));
  CHECK(parse("5 0\n").order() == 5);
  CHECK(parse("2 1\n\n0 1\n\n") == Digraph(2, {{0, 1}}));
  CHECK(error_of("3 2\n0 1\n1 1\n") == "line 3: loop at vertex 1");
  CHECK(error_of("3 2\n0 1\n0 1\n") == "line 3: duplicate arc 0 1");
  CHECK(error_of("3 1\n0 3\n") == "line 2: vertex out of range in arc 0 3");
  CHECK(error_of("3 2\n0 1\n") == "expected 2 arcs, found 1");
  CHECK(error_of("3\n") == "line 1: expected header \"n m\"");
  CHECK(error_of("3 x\n") == "line 1: expected an integer, got \"x\"");
  CHECK(error_of("2 1\n0 1\n1 0\n") == "line 3: unexpected trailing content");
  CHECK(error_of("") == "empty input; expected header \"n m\"");
  for (std::uint64_t s = 0; s < 50; ++s) {
    Digraph r = random_digraph(7, 0.3, s);
    CHECK(parse(format_edge_list(r)) == r);
  }
}

TEST_CASE("instance files") {
  auto inst = random_linkage_instance(7, 0.5, 4);
  std::istringstream in(format_instance(inst));
  auto back = parse_instance(in);
  CHECK(back.d == inst.d);
  CHECK(back.x1 == inst.x1);
  CHECK(back.y2 == inst.y2);
  std::istringstream bad("4 1\n2 0\nterminals 0 1 2 3\n");
  CHECK_THROWS_WITH_AS(parse_instance(bad), "line 3: invalid linkage instance: x1 and x2 must be sources",
                       ParseError);
  std::istringstream missing("4 0\n");
  CHECK_THROWS_AS(parse_instance(missing), ParseError);
}

TEST_CASE("witness text round trip") {
  const Digraph f = directed_cycle(3).graph;
  const Digraph d = directed_cycle(5).graph;
  auto w = find_subdivision(f, d, [](const Digraph& g) { return long_cycle(g).has_value(); });
  REQUIRE(w);
  const std::string text = format_witness(f, *w);
  CHECK(text == "branch 0 -> 0\nbranch 1 -> 1\nbranch 2 -> 2\n"
                "path 0 1: 0 1\npath 1 2: 1 2\npath 2 0: 2 3 4 0\n");
  std::istringstream in(text);
  auto back = parse_witness(in, f);
  CHECK(validate_witness(f, d, back));
  CHECK(back.branch == w->branch);

  const Digraph w3 = wheel(3).graph;
  for (std::uint64_t s = 0; s < 30; ++s) {
    Digraph h = random_digraph(7, 0.5, s);
    if (auto wit = find_subdivision(w3, h, detect_w3)) {
      std::istringstream again(format_witness(w3, *wit));
      CHECK(validate_witness(w3, h, parse_witness(again, w3)));
    }
  }
  std::istringstream wrong("branch 1 -> 0\n");
  CHECK_THROWS_WITH_AS(parse_witness(wrong, f), "line 1: branch lines must list pattern vertices in order",
                       ParseError);
}
