#pragma once

#include <stdexcept>
#include <vector>

#include "matchrb/graph.hpp"

namespace matchrb {

/// Pairwise vertex-disjoint edges, kept sorted in lexicographic order.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  VertexMask covered() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// True when the edges are pairwise disjoint and (if `host` is given) all present in it.
bool is_matching(const std::vector<Edge>& edges, const Graph* host = nullptr);

/// Size of a maximum matching of the subgraph induced by `active`
/// (Edmonds' blossom algorithm).
int matching_number(const Graph& g, VertexMask active);
/// Same on raw adjacency masks (entry v = neighbours of v), for hot loops.
int matching_number(std::span<const VertexMask> adjacency, VertexMask active);
inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

/// Some maximum matching of g[active], no tie-breaking guarantee. Faster than
/// max_matching when only a witness is needed.
Matching any_maximum_matching(const Graph& g, VertexMask active);

/// The lexicographically least maximum matching of g[active].
Matching max_matching(const Graph& g, VertexMask active);
inline Matching max_matching(const Graph& g) { return max_matching(g, g.vertices()); }

/// Bipartite graph with an explicit side assignment.
struct BipartitionedGraph {
  Graph graph;
  VertexMask side_a = 0;
  VertexMask side_b = 0;

  /// Throws GraphError unless the sides partition the vertices and every edge crosses.
  BipartitionedGraph(Graph g, VertexMask a, VertexMask b);

  int size_a() const { return popcount(side_a); }
  int size_b() const { return popcount(side_b); }
};

struct Deficiency {
  int d = 0;
  VertexMask witness = 0;  ///< S within side A with |S| - |N(S)| = d
  Matching matching;       ///< maximum matching, size |A| - d
};

/// Ore's deficiency max_{S ⊆ A} (|S| - |N(S)|) with a maximum matching. Uses
/// subset enumeration for |A| <= 20, alternating-path reachability otherwise.
Deficiency bipartite_deficiency(const BipartitionedGraph& bg);

/// Deficiency by enumerating all subsets of A (first maximizer in mask order).
Deficiency deficiency_by_enumeration(const BipartitionedGraph& bg);

/// Deficiency from a maximum matching: the A-vertices reachable by
/// alternating paths from unmatched A-vertices form a maximizing S.
Deficiency deficiency_by_alternating_paths(const BipartitionedGraph& bg);

bool is_factor_critical(const Graph& g, VertexMask active);
inline bool is_factor_critical(const Graph& g) { return is_factor_critical(g, g.vertices()); }

class MatchingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexicographically least matching of g[active] covering every vertex but
/// `v`. Throws MatchingError unless g[active] is factor-critical.
Matching near_perfect_matching_avoiding(const Graph& g, VertexMask active, Vertex v);
inline Matching near_perfect_matching_avoiding(const Graph& g, Vertex v) {
  return near_perfect_matching_avoiding(g, g.vertices(), v);
}

}  // namespace matchrb
