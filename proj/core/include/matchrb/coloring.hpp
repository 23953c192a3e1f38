#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "matchrb/graph.hpp"

namespace matchrb {

using Color = int;

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Surjective edge-coloring of K_n, stored per edge in lexicographic edge order.
///
/// Colors are always kept in restricted-growth form: walking the edges in
/// order, each color that has not appeared yet is the next unused integer
/// starting at 1. Two colorings that differ only by a renaming of colors are
/// therefore equal.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// `colors[i]` is the (positive, arbitrary) color of edge i in
  /// lexicographic order; renumbered on construction. Requires n >= 2.
  EdgeColoring(int n, std::vector<Color> colors);

  static EdgeColoring monochromatic(int n);
  static EdgeColoring rainbow(int n);

  int vertex_count() const { return n_; }
  int color_count() const { return c_; }
  int edge_count() const { return static_cast<int>(colors_.size()); }

  Color color(Vertex u, Vertex v) const { return colors_[edge_index(n_, u, v)]; }
  Color color_at(int index) const { return colors_[index]; }
  std::span<const Color> colors() const { return colors_; }

  /// Sizes of the color classes, indexed by color - 1.
  std::vector<int> class_sizes() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 0;
  int c_ = 0;
  std::vector<Color> colors_;
};

/// Renumbers arbitrary positive colors into restricted-growth form in place
/// and returns the number of distinct colors.
int normalize_colors(std::span<Color> colors);

}  // namespace matchrb
