#include "matchrb/extremal.hpp"

#include <array>
#include <string>

#include "matchrb/matching.hpp"

namespace matchrb {

namespace {

// Plain exhaustive matching number, kept separate from the blossom code so the
// brute-force oracles do not share an implementation with what they check.
int exhaustive_nu(const std::array<VertexMask, kMaxVertices>& adj, VertexMask left) {
  if (popcount(left) < 2) return 0;
  const Vertex v = lowest(left);
  const VertexMask rest = left & ~bit(v);
  int best = exhaustive_nu(adj, rest);
  if (2 * (best + 1) > popcount(left)) return best;
  for (VertexMask nb = adj[v] & rest; nb != 0; nb &= nb - 1) {
    best = std::max(best, 1 + exhaustive_nu(adj, rest & ~bit(lowest(nb))));
    if (2 * best >= popcount(left) - 1) break;
  }
  return best;
}

}  // namespace

const char* to_string(ExtremalBranch b) {
  switch (b) {
    case ExtremalBranch::kClique:
      return "clique";
    case ExtremalBranch::kJoin:
      return "join";
    case ExtremalBranch::kBoth:
      return "both";
  }
  return "?";
}

std::int64_t ext_matching_value(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < 2 * k)
    throw DomainError("ext(n, kK2) needs k >= 1 and n >= 2k (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  return std::max(choose2(2 * k - 1), choose2(k - 1) + (k - 1) * (n - k + 1));
}

ExtremalBranch ext_matching_branch(std::int64_t n, std::int64_t k) {
  ext_matching_value(n, k);
  const std::int64_t clique = choose2(2 * k - 1);
  const std::int64_t join = choose2(k - 1) + (k - 1) * (n - k + 1);
  if (clique == join) return ExtremalBranch::kBoth;
  return clique > join ? ExtremalBranch::kClique : ExtremalBranch::kJoin;
}

Graph clique_witness(int n, int k) {
  ext_matching_value(n, k);
  Graph g(n);
  for (Vertex u = 0; u < 2 * k - 1; ++u)
    for (Vertex v = u + 1; v < 2 * k - 1; ++v) g.add_edge(u, v);
  return g;
}

Graph join_witness(int n, int k) {
  ext_matching_value(n, k);
  Graph g(n);
  for (Vertex u = 0; u < k - 1; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

ExtremalWitness ext_matching(int n, int k) {
  ExtremalWitness w;
  w.value = ext_matching_value(n, k);
  w.branch = ext_matching_branch(n, k);
  if (n <= kMaxVertices) {
    if (w.branch != ExtremalBranch::kJoin) w.graphs.push_back(clique_witness(n, k));
    if (w.branch != ExtremalBranch::kClique) w.graphs.push_back(join_witness(n, k));
  }
  return w;
}

std::int64_t ext_bipartite_matching(std::int64_t m, std::int64_t n_b, std::int64_t k) {
  if (!(m >= n_b && n_b >= k && k >= 1))
    throw DomainError("ext(m, n, kK2) needs m >= n >= k >= 1 (m=" + std::to_string(m) +
                      ", n=" + std::to_string(n_b) + ", k=" + std::to_string(k) + ")");
  return m * (k - 1);
}

TwoKCase ext_2k_case(std::int64_t k) {
  if (k < 2) throw DomainError("ext(2k, (k-1)K2) case split needs k >= 2");
  const std::int64_t clique = choose2(2 * k - 3);
  const std::int64_t join = choose2(k - 2) + (k - 2) * (k + 2);
  TwoKCase out;
  out.value = std::max(clique, join);
  out.branch = clique == join  ? ExtremalBranch::kBoth
               : clique > join ? ExtremalBranch::kClique
                               : ExtremalBranch::kJoin;
  return out;
}

int brute_force_ext(int n, int k) {
  if (n < 1 || n > 7) throw DomainError("brute_force_ext enumerates only 1 <= n <= 7");
  if (k < 1) throw DomainError("k must be positive");
  const auto pairs = all_pairs(n);
  const int m = static_cast<int>(pairs.size());
  int best = 0;
  std::array<VertexMask, kMaxVertices> adj{};
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << m); ++sub) {
    const int edges = std::popcount(sub);
    if (edges <= best) continue;
    adj.fill(0);
    for (int i = 0; i < m; ++i) {
      if ((sub >> i) & 1U) {
        adj[pairs[i].u] |= bit(pairs[i].v);
        adj[pairs[i].v] |= bit(pairs[i].u);
      }
    }
    if (exhaustive_nu(adj, all_vertices(n)) < k) best = edges;
  }
  return best;
}

int brute_force_ext_bipartite(int m, int n_b, int k) {
  if (m < 1 || n_b < 1 || m * n_b > 20)
    throw DomainError("brute_force_ext_bipartite needs m * n_b <= 20");
  if (k < 1) throw DomainError("k must be positive");
  const int cells = m * n_b;
  int best = 0;
  std::array<VertexMask, kMaxVertices> adj{};
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << cells); ++sub) {
    const int edges = std::popcount(sub);
    if (edges <= best) continue;
    adj.fill(0);
    for (int i = 0; i < cells; ++i) {
      if ((sub >> i) & 1U) {
        const Vertex a = i / n_b;
        const Vertex b = m + i % n_b;
        adj[a] |= bit(b);
        adj[b] |= bit(a);
      }
    }
    if (exhaustive_nu(adj, all_vertices(m + n_b)) < k) best = edges;
  }
  return best;
}

}  // namespace matchrb
