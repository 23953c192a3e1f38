#include "matchrb/matching.hpp"

#include <algorithm>
#include <array>

namespace matchrb {

namespace {

// Edmonds' blossom algorithm on bitmask adjacency, restricted to `active`.
class Blossom {
 public:
  Blossom(std::span<const VertexMask> adj, VertexMask active)
      : adj_(adj), active_(active), n_(static_cast<int>(adj.size())) {
    match_.fill(-1);
  }

  int run() {
    int size = 0;
    // Greedy start.
    for (VertexMask s = active_; s != 0; s &= s - 1) {
      const Vertex v = lowest(s);
      if (match_[v] != -1) continue;
      VertexMask free_nbrs = adj_[v] & active_ & ~matched_;
      if (free_nbrs != 0) {
        const Vertex w = lowest(free_nbrs);
        pair(v, w);
        ++size;
      }
    }
    for (VertexMask s = active_; s != 0; s &= s - 1) {
      const Vertex root = lowest(s);
      if (match_[root] != -1) continue;
      Vertex v = find_path(root);
      if (v == -1) continue;
      ++size;
      while (v != -1) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        pair(v, pv);
        v = ppv;
      }
    }
    return size;
  }

  const std::array<Vertex, kMaxVertices>& mates() const { return match_; }

 private:
  void pair(Vertex a, Vertex b) {
    match_[a] = b;
    match_[b] = a;
    matched_ |= bit(a) | bit(b);
  }

  Vertex lca(Vertex a, Vertex b) {
    VertexMask seen = 0;
    for (;;) {
      a = base_[a];
      seen |= bit(a);
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen & bit(b)) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_ |= bit(base_[v]) | bit(base_[match_[v]]);
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    used_ = bit(root);
    for (int i = 0; i < n_; ++i) {
      parent_[i] = -1;
      base_[i] = i;
    }
    int head = 0;
    int tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const Vertex v = queue_[head++];
      for (VertexMask nb = adj_[v] & active_; nb != 0; nb &= nb - 1) {
        const Vertex to = lowest(nb);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          in_blossom_ = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexMask s = active_; s != 0; s &= s - 1) {
            const Vertex i = lowest(s);
            if (in_blossom_ & bit(base_[i])) {
              base_[i] = cur;
              if (!(used_ & bit(i))) {
                used_ |= bit(i);
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          const Vertex next = match_[to];
          used_ |= bit(next);
          queue_[tail++] = next;
        }
      }
    }
    return -1;
  }

  std::span<const VertexMask> adj_;
  VertexMask active_;
  int n_;
  VertexMask matched_ = 0;
  VertexMask used_ = 0;
  VertexMask in_blossom_ = 0;
  std::array<Vertex, kMaxVertices> match_{};
  std::array<Vertex, kMaxVertices> parent_{};
  std::array<Vertex, kMaxVertices> base_{};
  std::array<Vertex, kMaxVertices> queue_{};
};

Matching from_mates(const std::array<Vertex, kMaxVertices>& mates, VertexMask active) {
  Matching m;
  for (VertexMask s = active; s != 0; s &= s - 1) {
    const Vertex v = lowest(s);
    if (mates[v] > v) m.edges.emplace_back(v, mates[v]);
  }
  return m;
}

// Kuhn's augmenting-path matching from side A.
std::array<Vertex, kMaxVertices> bipartite_mates(const BipartitionedGraph& bg) {
  std::array<Vertex, kMaxVertices> mate;
  mate.fill(-1);
  const Graph& g = bg.graph;
  for (VertexMask s = bg.side_a; s != 0; s &= s - 1) {
    const Vertex root = lowest(s);
    std::array<Vertex, kMaxVertices> came_from;
    VertexMask visited_b = 0;
    std::array<Vertex, kMaxVertices> stack;
    int top = 0;
    stack[top++] = root;
    Vertex end = -1;
    // Alternating search; came_from[b] is the A vertex that reached b.
    while (top > 0 && end == -1) {
      const Vertex a = stack[--top];
      for (VertexMask nb = g.neighbors(a) & bg.side_b & ~visited_b; nb != 0; nb &= nb - 1) {
        const Vertex b = lowest(nb);
        visited_b |= bit(b);
        came_from[b] = a;
        if (mate[b] == -1) {
          end = b;
          break;
        }
        stack[top++] = mate[b];
      }
    }
    for (Vertex b = end; b != -1;) {
      const Vertex a = came_from[b];
      const Vertex prev = mate[a];
      mate[a] = b;
      mate[b] = a;
      b = prev;
    }
  }
  return mate;
}

}  // namespace

VertexMask Matching::covered() const {
  VertexMask m = 0;
  for (const Edge& e : edges) m |= e.mask();
  return m;
}

bool is_matching(const std::vector<Edge>& edges, const Graph* host) {
  VertexMask seen = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (seen & e.mask()) return false;
    seen |= e.mask();
    if (host != nullptr) {
      if (e.v >= host->vertex_count() || !host->has_edge(e.u, e.v)) return false;
    }
  }
  return true;
}

int matching_number(const Graph& g, VertexMask active) {
  Blossom b(g.adjacency(), active & g.vertices());
  return b.run();
}

int matching_number(std::span<const VertexMask> adjacency, VertexMask active) {
  Blossom b(adjacency, active & all_vertices(static_cast<int>(adjacency.size())));
  return b.run();
}

Matching any_maximum_matching(const Graph& g, VertexMask active) {
  active &= g.vertices();
  Blossom b(g.adjacency(), active);
  b.run();
  return from_mates(b.mates(), active);
}

Matching max_matching(const Graph& g, VertexMask active) {
  active &= g.vertices();
  Graph work = g.induced(active);
  int remaining = matching_number(work, active);
  Matching result;
  VertexMask free = active;
  for (const Edge& e : g.induced(active).edges()) {
    if (remaining == 0) break;
    if ((free & e.mask()) != e.mask()) continue;
    if (matching_number(work, free & ~e.mask()) == remaining - 1) {
      result.edges.push_back(e);
      free &= ~e.mask();
      --remaining;
    } else {
      work.remove_edge(e.u, e.v);
    }
  }
  return result;
}

BipartitionedGraph::BipartitionedGraph(Graph g, VertexMask a, VertexMask b)
    : graph(std::move(g)), side_a(a), side_b(b) {
  if ((a & b) != 0 || (a | b) != graph.vertices())
    throw GraphError("bipartition sides must partition the vertex set");
  for (VertexMask s = a; s != 0; s &= s - 1)
    if (graph.neighbors(lowest(s)) & a) throw GraphError("edge inside side A");
  for (VertexMask s = b; s != 0; s &= s - 1)
    if (graph.neighbors(lowest(s)) & b) throw GraphError("edge inside side B");
}

Deficiency deficiency_by_enumeration(const BipartitionedGraph& bg) {
  const std::vector<Vertex> a = to_vertices(bg.side_a);
  const int m = static_cast<int>(a.size());
  if (m > 30) throw GraphError("subset enumeration limited to |A| <= 30");
  Deficiency out;
  out.d = 0;
  out.witness = 0;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    VertexMask s = 0;
    for (int i = 0; i < m; ++i)
      if ((sub >> i) & 1U) s |= bit(a[i]);
    const int value = popcount(s) - popcount(bg.graph.neighbors(s));
    if (value > out.d) {
      out.d = value;
      out.witness = s;
    }
  }
  out.matching = max_matching(bg.graph);
  return out;
}

Deficiency deficiency_by_alternating_paths(const BipartitionedGraph& bg) {
  const auto mate = bipartite_mates(bg);
  VertexMask unmatched_a = 0;
  for (VertexMask s = bg.side_a; s != 0; s &= s - 1)
    if (mate[lowest(s)] == -1) unmatched_a |= bit(lowest(s));
  VertexMask reach_a = unmatched_a;
  VertexMask frontier = unmatched_a;
  while (frontier != 0) {
    const VertexMask b = bg.graph.neighbors(frontier) & bg.side_b;
    VertexMask next = 0;
    for (VertexMask s = b; s != 0; s &= s - 1) next |= bit(mate[lowest(s)]);
    next &= ~reach_a;
    reach_a |= next;
    frontier = next;
  }
  Deficiency out;
  out.d = popcount(unmatched_a);
  out.witness = out.d > 0 ? reach_a : 0;
  out.matching = max_matching(bg.graph);
  return out;
}

Deficiency bipartite_deficiency(const BipartitionedGraph& bg) {
  return bg.size_a() <= 20 ? deficiency_by_enumeration(bg) : deficiency_by_alternating_paths(bg);
}

bool is_factor_critical(const Graph& g, VertexMask active) {
  active &= g.vertices();
  const int n = popcount(active);
  if (n % 2 == 0) return n == 0;
  for (VertexMask s = active; s != 0; s &= s - 1)
    if (matching_number(g, active & ~bit(lowest(s))) != (n - 1) / 2) return false;
  return true;
}

Matching near_perfect_matching_avoiding(const Graph& g, VertexMask active, Vertex v) {
  active &= g.vertices();
  if (!(active & bit(v))) throw MatchingError("vertex " + std::to_string(v) + " not in graph");
  if (!is_factor_critical(g, active)) throw MatchingError("graph is not factor-critical");
  const VertexMask rest = active & ~bit(v);
  Matching m = max_matching(g, rest);
  if (2 * m.size() != popcount(rest))
    throw MatchingError("no perfect matching after deleting vertex " + std::to_string(v) +
                        " (maximum matching covers " + std::to_string(2 * m.size()) + " of " +
                        std::to_string(popcount(rest)) + " vertices)");
  return m;
}

}  // namespace matchrb
