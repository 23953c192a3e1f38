#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchrb {

using Vertex = int;

/// Bitset over vertex indices; every graph in this library has at most 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask all_vertices(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

std::vector<Vertex> to_vertices(VertexMask m);
VertexMask to_mask(const std::vector<Vertex>& vs);

/// Unordered vertex pair in normal form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  VertexMask mask() const { return bit(u) | bit(v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of edge (u,v) in the lexicographic order of all pairs of K_n.
constexpr int edge_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// All pairs of K_n in lexicographic order; entry i has edge_index i.
std::vector<Edge> all_pairs(int n);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  /// Throws GraphError on self-loops, out-of-range endpoints and duplicates.
  void add_edge(Vertex u, Vertex v);
  /// Like add_edge but silently ignores an existing edge.
  void ensure_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  std::span<const VertexMask> adjacency() const { return adj_; }
  VertexMask neighbors(VertexMask set) const;
  int degree(Vertex v) const { return popcount(adj_[v]); }
  VertexMask vertices() const { return all_vertices(n_); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Same vertex indices, only edges with both endpoints in `keep`.
  Graph induced(VertexMask keep) const;

  /// Connected components of the subgraph induced by `within`, ordered by smallest vertex.
  std::vector<VertexMask> components(VertexMask within) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> adj_;
};

Graph complete_graph(int n);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace matchrb
