#include "matchrb/rainbow.hpp"

#include <algorithm>
#include <string>

namespace matchrb {

void RainbowSolver::reset(const EdgeColoring& col) {
  reset(col.vertex_count(), col.colors(), col.color_count());
}

void RainbowSolver::reset(int n, std::span<const Color> colors, int color_count) {
  if (n < 2 || n > kMaxVertices) throw ColoringError("rainbow search needs 2..64 vertices");
  if (static_cast<int>(colors.size()) != pair_count(n))
    throw ColoringError("rainbow search needs a total coloring");
  n_ = n;
  c_ = color_count;
  color_.assign(static_cast<std::size_t>(n) * n, 0);
  int i = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++i) {
      if (colors[i] < 1 || colors[i] > c_) throw ColoringError("color outside palette");
      color_[u * n + v] = colors[i];
      color_[v * n + u] = colors[i];
    }
  }
  used_.assign(c_ + 1, 0);
  class_stamp_.assign(c_ + 1, 0);
  vertex_stamp_.assign(c_ + 1, 0);
  class_size_.assign(c_ + 1, 0);
  class_common_.assign(c_ + 1, 0);
  class_union_.assign(c_ + 1, 0);
  r_adj_.assign(n_, 0);
  usable_.reserve(pair_count(n));
  classes_.reserve(c_);
  token_ = 0;
}

// Returns an upper bound on the final matching size below this node and the
// vertex to branch on (-1 when fewer than two vertices remain).
int RainbowSolver::bound_and_pick(Vertex& pick) {
  pick = -1;
  const int depth = static_cast<int>(current_.size());
  const int avail = popcount(available_);
  int bound = depth + avail / 2;
  if (bound < target_ || avail < 2) return bound;

  const std::uint64_t node_token = ++token_;
  classes_.clear();
  usable_.clear();
  int fewest = kMaxVertices * kMaxVertices;
  for (VertexMask s = available_; s != 0; s &= s - 1) {
    const Vertex v = lowest(s);
    const Color* row = &color_[v * n_];
    const std::uint64_t vertex_token = ++token_;
    int distinct = 0;
    for (VertexMask t = available_ & ~bit(v); t != 0; t &= t - 1) {
      const Vertex w = lowest(t);
      const Color c = row[w];
      if (used_[c]) continue;
      if (vertex_stamp_[c] != vertex_token) {
        vertex_stamp_[c] = vertex_token;
        ++distinct;
      }
      if (w < v) continue;
      const VertexMask em = bit(v) | bit(w);
      usable_.push_back({v, w, c});
      if (class_stamp_[c] < node_token) {
        class_stamp_[c] = node_token;
        classes_.push_back(c);
        class_size_[c] = 1;
        class_common_[c] = em;
        class_union_[c] = em;
      } else {
        ++class_size_[c];
        class_common_[c] &= em;
        class_union_[c] |= em;
      }
    }
    if (distinct < fewest) {
      fewest = distinct;
      pick = v;
    }
  }

  bound = std::min(bound, depth + static_cast<int>(classes_.size()));
  if (bound < target_) return bound;

  // Colors whose available edges pairwise intersect go into R.
  int spread = 0;
  for (Color c : classes_) {
    const bool intersecting = class_common_[c] != 0 ||
                              (class_size_[c] == 3 && popcount(class_union_[c]) == 3);
    // Reuse class_size_ as a flag: negative marks an intersecting class.
    if (intersecting)
      class_size_[c] = -1;
    else
      ++spread;
  }
  for (VertexMask s = available_; s != 0; s &= s - 1) r_adj_[lowest(s)] = 0;
  for (const UsableEdge& e : usable_) {
    if (class_size_[e.c] < 0) {
      r_adj_[e.u] |= bit(e.v);
      r_adj_[e.v] |= bit(e.u);
    }
  }
  const int nu_r = matching_number(std::span<const VertexMask>(r_adj_.data(), n_), available_);
  return std::min(bound, depth + nu_r + spread);
}

bool RainbowSolver::search() {
  ++nodes_;
  if (node_limit_ != 0 && nodes_ > node_limit_)
    throw SearchLimitExceeded("rainbow search exceeded " + std::to_string(node_limit_) +
                              " nodes");
  const int depth = static_cast<int>(current_.size());
  if (depth > static_cast<int>(best_.size())) {
    best_ = current_;
    if (stop_at_target_) {
      if (depth >= target_) return true;
    } else {
      target_ = depth + 1;
    }
  }
  Vertex pick = -1;
  if (bound_and_pick(pick) < target_ || pick == -1) return false;

  const VertexMask saved = available_;
  available_ &= ~bit(pick);
  const Color* row = &color_[pick * n_];
  for (VertexMask t = saved & ~bit(pick); t != 0; t &= t - 1) {
    const Vertex w = lowest(t);
    const Color c = row[w];
    if (used_[c]) continue;
    used_[c] = 1;
    available_ &= ~bit(w);
    current_.emplace_back(pick, w);
    const bool done = search();
    current_.pop_back();
    available_ |= bit(w);
    used_[c] = 0;
    if (done) {
      available_ = saved;
      return true;
    }
  }
  const bool done = search();
  available_ = saved;
  return done;
}

RainbowResult RainbowSolver::maximum() {
  available_ = all_vertices(n_);
  current_.clear();
  best_.clear();
  std::fill(used_.begin(), used_.end(), 0);
  stop_at_target_ = false;
  target_ = 1;
  nodes_ = 0;
  search();
  RainbowResult out;
  out.size = static_cast<int>(best_.size());
  out.witness.edges = best_;
  std::sort(out.witness.edges.begin(), out.witness.edges.end());
  for (const Edge& e : out.witness.edges) out.colors_used.push_back(color_[e.u * n_ + e.v]);
  std::sort(out.colors_used.begin(), out.colors_used.end());
  out.nodes = nodes_;
  return out;
}

std::optional<Matching> RainbowSolver::find(int k) {
  available_ = all_vertices(n_);
  current_.clear();
  best_.clear();
  std::fill(used_.begin(), used_.end(), 0);
  stop_at_target_ = true;
  target_ = k;
  nodes_ = 0;
  if (k <= 0) return Matching{};
  if (!search()) return std::nullopt;
  Matching m;
  m.edges = best_;
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

RainbowResult max_rainbow_matching(const EdgeColoring& col, std::uint64_t node_limit) {
  RainbowSolver solver(col);
  solver.set_node_limit(node_limit);
  return solver.maximum();
}

RainbowQuery has_rainbow_k_matching(const EdgeColoring& col, int k) {
  if (k < 0 || 2 * k > col.vertex_count())
    throw std::invalid_argument("rainbow " + std::to_string(k) + "K2 needs 2k <= n (n=" +
                                std::to_string(col.vertex_count()) + ")");
  RainbowSolver solver(col);
  RainbowQuery q;
  q.witness = solver.find(k);
  q.found = q.witness.has_value();
  return q;
}

bool is_rainbow_matching(const EdgeColoring& col, const std::vector<Edge>& edges) {
  if (!is_matching(edges)) return false;
  std::vector<Color> seen;
  for (const Edge& e : edges) {
    if (e.v >= col.vertex_count()) return false;
    seen.push_back(col.color(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Graph representative_subgraph(const EdgeColoring& col) {
  const int n = col.vertex_count();
  Graph g(n);
  std::vector<std::uint8_t> have(col.color_count() + 1, 0);
  int i = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++i) {
      const Color c = col.color_at(i);
      if (!have[c]) {
        have[c] = 1;
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace matchrb
