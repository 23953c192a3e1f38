#include "matchrb/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace matchrb {

namespace {

struct Line {
  int number;
  std::vector<long long> fields;
};

long long parse_integer(std::string_view token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "not an integer: '" + std::string(token) + "'");
  return value;
}

// Splits into non-empty lines of whitespace-separated integers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.fields.push_back(parse_integer(raw.substr(start, i - start), number));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
  if (line.fields.size() != count)
    throw ParseError(line.number, std::string("expected ") + what);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  expect_fields(lines[0], 1, "vertex count");
  const long long n = lines[0].fields[0];
  if (n < 0 || n > kMaxVertices)
    throw ParseError(lines[0].number, "vertex count outside 0.." + std::to_string(kMaxVertices));
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_fields(line, 2, "edge 'u v'");
    const long long u = line.fields[0];
    const long long v = line.fields[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line.number, "vertex index out of range");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(line.number, "duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty coloring file");
  expect_fields(lines[0], 2, "header 'n c'");
  const long long n = lines[0].fields[0];
  const long long c = lines[0].fields[1];
  if (n < 2 || n > kMaxVertices)
    throw ParseError(lines[0].number, "vertex count outside 2.." + std::to_string(kMaxVertices));
  if (c < 1) throw ParseError(lines[0].number, "color count must be positive");
  const int nn = static_cast<int>(n);
  std::vector<Color> colors(pair_count(nn), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_fields(line, 3, "'u v color'");
    const long long u = line.fields[0];
    const long long v = line.fields[1];
    const long long color = line.fields[2];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line.number, "vertex index out of range");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (color < 1) throw ParseError(line.number, "non-positive color " + std::to_string(color));
    if (color > c)
      throw ParseError(line.number, "color " + std::to_string(color) + " exceeds declared " +
                                        std::to_string(c));
    Color& slot = colors[edge_index(nn, static_cast<Vertex>(u), static_cast<Vertex>(v))];
    if (slot != 0) throw ParseError(line.number, "repeated edge");
    slot = static_cast<Color>(color);
  }
  for (int i = 0; i < static_cast<int>(colors.size()); ++i) {
    if (colors[i] == 0) {
      const Edge e = all_pairs(nn)[i];
      throw ParseError(0, "incomplete coloring: edge " + std::to_string(e.u) + " " +
                              std::to_string(e.v) + " missing");
    }
  }
  return EdgeColoring(nn, std::move(colors));
}

std::string serialize_coloring(const EdgeColoring& col) {
  std::ostringstream out;
  const int n = col.vertex_count();
  out << n << ' ' << col.color_count() << '\n';
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out << u << ' ' << v << ' ' << col.color(u, v) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace matchrb
