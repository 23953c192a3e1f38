#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "matchrb/coloring.hpp"
#include "matchrb/graph.hpp"

namespace matchrb {

/// Malformed graph or coloring text. `line()` is 1-based; 0 means the
/// problem concerns the document as a whole (e.g. a missing edge).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Graph file: first line the vertex count, then one "u v" line per edge.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Coloring file: first line "n c", then one "u v color" line per edge of K_n,
// every edge exactly once, 1 <= color <= c.
EdgeColoring parse_coloring(std::string_view text);
std::string serialize_coloring(const EdgeColoring& col);

std::string read_file(const std::string& path);
/// Writes via a temporary sibling file and a rename.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace matchrb
