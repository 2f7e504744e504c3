#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// Vertices of a graph are identified by their index in the canonical
// (lexicographic) vertex order fixed at construction.
using VertexId = int;

// Sorted list of distinct vertex indices of one DefiningGraph. May be empty
// (the empty set is meaningful: the trivial parabolic).
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  int label = 2;  // m_uv >= 2; an absent edge means no relation (m = infinity)
};

// A circuit of length four on distinct vertices, sides in cyclic order
// cycle[0]-cycle[1]-cycle[2]-cycle[3]-cycle[0]; chords lists the diagonal
// pairs that span an edge (empty for an induced square).
struct FourCircuit {
  std::array<VertexId, 4> cycle{};
  std::vector<std::pair<VertexId, VertexId>> chords;
};

// Labelled simple graph encoding an Artin/Coxeter presentation. Immutable
// after construction; all queries are const.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  // Canonicalizes: vertex names sorted lexicographically, edges re-indexed
  // and sorted. Throws parse_error on duplicate names/edges, self-loops,
  // labels < 2 or unknown endpoint names.
  DefiningGraph(std::vector<std::string> names,
                std::vector<std::tuple<std::string, std::string, int>> edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> index_of(const std::string& name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(VertexId u, VertexId v) const;
  // nullopt when {u,v} is not an edge (no relation).
  std::optional<int> label(VertexId u, VertexId v) const;

  // Bitmask of neighbours of v (vertex_count() <= 64 is enforced).
  std::uint64_t neighbor_mask(VertexId v) const { return adj_[v]; }
  std::uint64_t label2_neighbor_mask(VertexId v) const { return adj2_[v]; }

  VertexSet full_vertex_set() const;
  VertexSet vertex_set_from_names(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const VertexSet& s) const;

  // Induced labelled subgraph on R (checked to be a subset of V).
  DefiningGraph full_subgraph(const VertexSet& r) const;

  // All maximal cliques, each sorted, list sorted lexicographically.
  std::vector<VertexSet> maximal_cliques() const;

  // Chordless 4-cycles, one per inducing 4-subset, in canonical orientation
  // (min vertex first, then its smaller cycle neighbour).
  std::vector<std::array<VertexId, 4>> induced_four_cycles() const;

  // All 4-circuits, chords permitted (up to three per 4-subset).
  std::vector<FourCircuit> four_circuits() const;

  std::string serialize() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<int> label_;            // n*n, 0 = absent
  std::vector<std::uint64_t> adj_;    // adjacency masks
  std::vector<std::uint64_t> adj2_;   // label-2 adjacency masks

  void build_tables();
};

// Parses the defining-graph DSL: one statement per line, `# comment`,
// `vertex <name>`, `edge <name> <name> <int>=2>`. In strict mode an edge may
// not implicitly declare its endpoints.
DefiningGraph parse_defining_graph(const std::string& text, bool strict = false);

// Mask helpers shared by the subset searches.
VertexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const VertexSet& s);

}  // namespace artin
