#include "matchrb/graph.hpp"

#include <string>

namespace matchrb {

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexMask to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  out.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(vertex_count) + " outside 0.." +
                     std::to_string(kMaxVertices));
  adj_.assign(n_, 0);
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw GraphError("vertex index out of range in edge " + std::to_string(u) + " " +
                     std::to_string(v));
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (has_edge(u, v))
    throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

void Graph::ensure_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!has_edge(u, v)) add_edge(u, v);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --m_;
}

VertexMask Graph::neighbors(VertexMask set) const {
  VertexMask out = 0;
  for (VertexMask s = set; s != 0; s &= s - 1) out |= adj_[lowest(s)];
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    VertexMask later = adj_[u] & ~all_vertices(u + 1);
    for (; later != 0; later &= later - 1) out.emplace_back(u, lowest(later));
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  Graph h(n_);
  int twice = 0;
  for (Vertex u = 0; u < n_; ++u) {
    h.adj_[u] = (keep >> u) & 1U ? adj_[u] & keep : 0;
    twice += popcount(h.adj_[u]);
  }
  h.m_ = twice / 2;
  return h;
}

std::vector<VertexMask> Graph::components(VertexMask within) const {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left != 0) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = neighbors(frontier) & within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.u + shift, e.v + shift);
  return g;
}

}  // namespace matchrb
