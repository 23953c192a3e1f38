#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matchrb/coloring.hpp"
#include "matchrb/graph.hpp"

namespace matchrb {

enum class GadgetKind {
  kSG1,         ///< K_{2k-3} and K_3, rest isolated
  kSG2a,        ///< K_{2k-3} and P_3, rest isolated
  kSG2b,        ///< K_{2k-3} minus an edge, and K_3
  kSG3,         ///< (K_{2k-3} - xz) + xu + xv + yw + yz
  kLBGeneric,   ///< rainbow extremal graph plus one color on its complement
  kLB2K,        ///< n = 2k construction around K_{2k-3} and three extra vertices
  kK4ThreePM,   ///< K_4 colored by its three perfect matchings
};

const char* to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

/// A coloring of K_n, total for the lower-bound kinds and partial for the
/// SG gadgets (only the gadget's rainbow subgraph is colored).
struct GadgetColoring {
  GadgetKind kind = GadgetKind::kLBGeneric;
  int k = 0;
  int n = 0;
  /// Per edge in lexicographic order; 0 marks an uncolored edge.
  std::vector<Color> colors;
  int palette = 0;  ///< colors in use are exactly 1..palette
  /// Named vertices of the construction and their indices.
  std::vector<std::pair<std::string, Vertex>> labels;
  /// Free-form note on which construction was used (e.g. "join", "clique").
  std::string construction;

  bool is_total() const;
  /// Throws ColoringError unless total.
  EdgeColoring to_coloring() const;
  /// Edges that carry a color.
  Graph colored_subgraph() const;
  /// Edges left for a completion, in lexicographic order.
  std::vector<Edge> free_edges() const;
};

/// Strongest known coloring of K_n with rb(n,kK2) - 1 colors and no rainbow kK2.
/// Requires n >= 2k and k >= 2 (with k = 1 no coloring has zero colors).
GadgetColoring lower_bound_coloring(int n, int k);

/// The SG gadgets; k >= 3, n >= 2k (SG1, SG3) or n >= 2k+1 (SG2a, SG2b).
GadgetColoring gadget_coloring(GadgetKind kind, int k, int n);

/// Fills every free edge from `assignment` (one color per free edge, in
/// free_edges() order). Colors must come from the existing palette.
EdgeColoring complete_gadget(const GadgetColoring& gc, const std::vector<Color>& assignment);
/// Same with an explicit edge -> color map.
EdgeColoring complete_gadget(const GadgetColoring& gc, const std::map<Edge, Color>& assignment);

/// JSON sidecar: kind, k, n, palette, labels, construction, colored edges.
std::string gadget_json(const GadgetColoring& gc);

}  // namespace matchrb
