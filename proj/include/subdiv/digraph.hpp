#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subdiv {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // kept sorted

// Alive-vertex mask. An empty mask means every vertex is alive.
using VertexMask = std::vector<char>;

inline bool alive(const VertexMask& mask, Vertex v) {
  return mask.empty() || mask[v];
}

// Strict digraph on vertices 0..n-1 with sorted adjacency lists.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Arc>& arcs);

  int order() const { return static_cast<int>(out_.size()); }
  int size() const { return m_; }

  bool has_arc(Vertex u, Vertex v) const;
  // Throws std::invalid_argument on loops, duplicates or bad ids.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);
  Vertex add_vertex();

  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  // All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph& other) const { return out_ == other.out_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  int m_ = 0;
};

struct DiPath {
  std::vector<Vertex> vertices;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const DiPath&) const = default;
};

bool is_dipath(const Digraph& d, const DiPath& p);
DiPath reversed(const DiPath& p);
// p followed by q, where q starts at p's last vertex.
DiPath concat(const DiPath& p, const DiPath& q);
// Subpath of p between positions i and j inclusive.
DiPath subpath(const DiPath& p, int i, int j);

enum class Anchor { PairXY, SetSet, FromVertex, ToVertex };

// (W,S,Z) partition of the alive vertices certifying that no bound+1
// disjoint paths of the given kind exist from sources to sinks. When
// removed_arc is set the certificate is for the digraph minus that arc,
// which is how the x->y arc case is reduced.
struct Separation {
  VertexSet W, S, Z;
  int bound = 0;
  Anchor anchor = Anchor::PairXY;
  VertexSet sources, sinks;
  std::optional<Arc> removed_arc;
};

bool validate_separation(const Digraph& d, const Separation& sep,
                         const VertexMask& mask = {});

// branch[a] is the image of F-vertex a; paths[i] realizes F.arcs()[i].
struct SubdivisionWitness {
  std::vector<Vertex> branch;
  std::vector<DiPath> paths;
};

bool validate_witness(const Digraph& f, const Digraph& d,
                      const SubdivisionWitness& w);

struct Multidigraph {
  VertexSet vertices;
  std::vector<Arc> arcs;  // sorted, repeated for parallel arcs, loops allowed
};

struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> to_host;    // new id -> host id
  std::vector<Vertex> from_host;  // host id -> new id or -1
};

std::vector<VertexSet> strong_components(const Digraph& d,
                                         const VertexMask& mask = {});
bool is_strong(const Digraph& d);
VertexSet outsection(const Digraph& d, const VertexSet& x,
                     const VertexMask& mask = {});
VertexSet insection(const Digraph& d, const VertexSet& x,
                    const VertexMask& mask = {});
bool reaches(const Digraph& d, Vertex from, Vertex to,
             const VertexMask& mask = {});
// Shortest dipath from some vertex of `from` to some vertex of `to`.
std::optional<DiPath> bfs_path(const Digraph& d, const VertexSet& from,
                               const VertexSet& to,
                               const VertexMask& mask = {});

Digraph converse(const Digraph& d);
bool is_big(const Digraph& d, Vertex v);
VertexSet big_vertices(const Digraph& d);
std::vector<std::pair<Vertex, Vertex>> two_cycle_graph(const Digraph& d);
Multidigraph big_paths_digraph(const Digraph& d);

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep);
VertexMask mask_without(int n, const VertexSet& removed);
VertexMask mask_of(int n, const VertexSet& kept);

std::string to_string(const DiPath& p);

}  // namespace subdiv
