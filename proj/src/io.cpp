#include "subdiv/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace subdiv {

namespace {

class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(number_) + ": " + what);
  }

  int integer(const std::string& tok) const {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) fail("expected an integer, got \"" + tok + "\"");
    return v;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

Digraph read_graph(Lines& lines) {
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw ParseError("empty input; expected header \"n m\"");
  if (tok.size() != 2) lines.fail("expected header \"n m\"");
  const int n = lines.integer(tok[0]), m = lines.integer(tok[1]);
  if (n < 0 || m < 0) lines.fail("negative count in header");
  Digraph d(n);
  for (int i = 0; i < m; ++i) {
    if (!lines.next(tok))
      throw ParseError("expected " + std::to_string(m) + " arcs, found " + std::to_string(i));
    if (tok.size() != 2) lines.fail("expected an arc \"u v\"");
    const int u = lines.integer(tok[0]), v = lines.integer(tok[1]);
    if (u < 0 || u >= n || v < 0 || v >= n)
      lines.fail("vertex out of range in arc " + tok[0] + " " + tok[1]);
    if (u == v) lines.fail("loop at vertex " + tok[0]);
    if (d.has_arc(u, v)) lines.fail("duplicate arc " + tok[0] + " " + tok[1]);
    d.add_arc(u, v);
  }
  return d;
}

void expect_end(Lines& lines) {
  std::vector<std::string> tok;
  if (lines.next(tok)) lines.fail("unexpected trailing content");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return in;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  Lines lines(in);
  Digraph d = read_graph(lines);
  expect_end(lines);
  return d;
}

std::string format_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.size() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

LinkageInstance parse_instance(std::istream& in) {
  Lines lines(in);
  LinkageInstance inst;
  inst.d = read_graph(lines);
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw ParseError("missing \"terminals x1 x2 y1 y2\" line");
  if (tok.size() != 5 || tok[0] != "terminals") lines.fail("expected \"terminals x1 x2 y1 y2\"");
  inst.x1 = lines.integer(tok[1]);
  inst.x2 = lines.integer(tok[2]);
  inst.y1 = lines.integer(tok[3]);
  inst.y2 = lines.integer(tok[4]);
  if (auto why = instance_problem(inst); !why.empty())
    lines.fail("invalid linkage instance: " + why);
  expect_end(lines);
  return inst;
}

std::string format_instance(const LinkageInstance& inst) {
  return format_edge_list(inst.d) + "terminals " + std::to_string(inst.x1) + ' ' +
         std::to_string(inst.x2) + ' ' + std::to_string(inst.y1) + ' ' +
         std::to_string(inst.y2) + '\n';
}

std::string format_witness(const Digraph& f, const SubdivisionWitness& w) {
  std::ostringstream out;
  for (Vertex a = 0; a < f.order(); ++a) out << "branch " << a << " -> " << w.branch[a] << '\n';
  const auto arcs = f.arcs();
  for (size_t i = 0; i < arcs.size(); ++i) {
    out << "path " << arcs[i].first << ' ' << arcs[i].second << ':';
    for (Vertex v : w.paths[i].vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

SubdivisionWitness parse_witness(std::istream& in, const Digraph& f) {
  Lines lines(in);
  SubdivisionWitness w;
  std::vector<std::string> tok;
  for (Vertex a = 0; a < f.order(); ++a) {
    if (!lines.next(tok)) throw ParseError("missing branch line for vertex " + std::to_string(a));
    if (tok.size() != 4 || tok[0] != "branch" || tok[2] != "->")
      lines.fail("expected \"branch a -> v\"");
    if (lines.integer(tok[1]) != a) lines.fail("branch lines must list pattern vertices in order");
    w.branch.push_back(lines.integer(tok[3]));
  }
  for (auto [a, b] : f.arcs()) {
    if (!lines.next(tok)) throw ParseError("missing path line for arc " + std::to_string(a) +
                                           " " + std::to_string(b));
    if (tok.size() < 4 || tok[0] != "path" || tok[2].empty() || tok[2].back() != ':')
      lines.fail("expected \"path a b: v0 v1 ...\"");
    tok[2].pop_back();
    if (lines.integer(tok[1]) != a || lines.integer(tok[2]) != b)
      lines.fail("path lines must follow the pattern's arc order");
    DiPath p;
    for (size_t i = 3; i < tok.size(); ++i) p.vertices.push_back(lines.integer(tok[i]));
    w.paths.push_back(p);
  }
  expect_end(lines);
  return w;
}

Digraph read_edge_list_file(const std::string& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

LinkageInstance read_instance_file(const std::string& path) {
  auto in = open(path);
  return parse_instance(in);
}

}  // namespace subdiv
