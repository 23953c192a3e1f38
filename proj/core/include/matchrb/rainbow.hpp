#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "matchrb/coloring.hpp"
#include "matchrb/graph.hpp"
#include "matchrb/matching.hpp"

namespace matchrb {

/// A matching whose edges carry pairwise distinct colors.
struct RainbowResult {
  int size = 0;
  Matching witness;
  std::vector<Color> colors_used;  ///< sorted
  std::uint64_t nodes = 0;         ///< search nodes expanded
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact branch-and-bound search for rainbow matchings in a total coloring of K_n.
///
/// Each node branches on the available vertex with the fewest distinct unused
/// colors on its available edges: match it along one of those edges, or leave
/// it uncovered. A node is cut when the current size plus any of these bounds
/// cannot reach the target:
///   - half the available vertices;
///   - the number of unused colors still present on available edges;
///   - nu(R) + X, where R holds the available edges of every color whose
///     available edges pairwise intersect (a star or a triangle, so at most
///     one of them fits in any matching) and X counts the other colors.
///
/// The object keeps its buffers between calls; reuse one per thread when
/// sweeping many colorings.
class RainbowSolver {
 public:
  RainbowSolver() = default;
  explicit RainbowSolver(const EdgeColoring& col) { reset(col); }

  void reset(const EdgeColoring& col);
  /// Raw form: colors in lexicographic edge order, all within 1..color_count.
  void reset(int n, std::span<const Color> colors, int color_count);

  /// Search nodes allowed per call; 0 means unlimited.
  void set_node_limit(std::uint64_t limit) { node_limit_ = limit; }

  RainbowResult maximum();
  /// A rainbow matching with k edges, or nullopt if none exists.
  std::optional<Matching> find(int k);

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search();
  int bound_and_pick(Vertex& pick);

  int n_ = 0;
  int c_ = 0;
  struct UsableEdge {
    Vertex u;
    Vertex v;
    Color c;
  };

  std::vector<Color> color_;  // n*n row-major, 0 on the diagonal
  std::vector<std::uint8_t> used_;
  std::vector<std::uint64_t> class_stamp_;
  std::vector<std::uint64_t> vertex_stamp_;
  std::vector<int> class_size_;
  std::vector<VertexMask> class_common_;
  std::vector<VertexMask> class_union_;
  std::vector<Color> classes_;
  std::vector<UsableEdge> usable_;
  std::vector<VertexMask> r_adj_;

  VertexMask available_ = 0;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
  int target_ = 0;
  bool stop_at_target_ = false;
  std::uint64_t token_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_ = 0;
};

/// Largest rainbow matching. Throws SearchLimitExceeded if `node_limit` is hit.
RainbowResult max_rainbow_matching(const EdgeColoring& col, std::uint64_t node_limit = 0);

struct RainbowQuery {
  bool found = false;
  std::optional<Matching> witness;
};

/// Whether a rainbow matching of size k exists; requires 2k <= n.
RainbowQuery has_rainbow_k_matching(const EdgeColoring& col, int k);

/// True iff the edges form a matching with pairwise distinct colors.
bool is_rainbow_matching(const EdgeColoring& col, const std::vector<Edge>& edges);

/// One edge per color class (the lexicographically least), so the result has
/// exactly color_count edges and is rainbow.
Graph representative_subgraph(const EdgeColoring& col);

}  // namespace matchrb
