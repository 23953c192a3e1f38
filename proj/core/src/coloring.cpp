#include "matchrb/coloring.hpp"

#include <string>
#include <unordered_map>

namespace matchrb {

int normalize_colors(std::span<Color> colors) {
  std::unordered_map<Color, Color> renumber;
  for (Color& c : colors) {
    auto [it, fresh] = renumber.try_emplace(c, static_cast<Color>(renumber.size()) + 1);
    c = it->second;
  }
  return static_cast<int>(renumber.size());
}

EdgeColoring::EdgeColoring(int n, std::vector<Color> colors) : n_(n), colors_(std::move(colors)) {
  if (n < 2 || n > kMaxVertices)
    throw ColoringError("coloring needs 2.." + std::to_string(kMaxVertices) + " vertices, got " +
                        std::to_string(n));
  if (static_cast<int>(colors_.size()) != pair_count(n))
    throw ColoringError("incomplete coloring: expected " + std::to_string(pair_count(n)) +
                        " edges, got " + std::to_string(colors_.size()));
  for (Color c : colors_)
    if (c < 1) throw ColoringError("non-positive color " + std::to_string(c));
  c_ = normalize_colors(colors_);
}

EdgeColoring EdgeColoring::monochromatic(int n) {
  return EdgeColoring(n, std::vector<Color>(pair_count(n), 1));
}

EdgeColoring EdgeColoring::rainbow(int n) {
  std::vector<Color> colors(pair_count(n));
  for (int i = 0; i < static_cast<int>(colors.size()); ++i) colors[i] = i + 1;
  return EdgeColoring(n, std::move(colors));
}

std::vector<int> EdgeColoring::class_sizes() const {
  std::vector<int> sizes(c_, 0);
  for (Color c : colors_) ++sizes[c - 1];
  return sizes;
}

}  // namespace matchrb
