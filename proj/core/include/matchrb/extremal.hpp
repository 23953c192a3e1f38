#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matchrb/graph.hpp"

namespace matchrb {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Which of the two extremal families attains the maximum.
enum class ExtremalBranch { kClique, kJoin, kBoth };

const char* to_string(ExtremalBranch b);

struct ExtremalWitness {
  std::int64_t value = 0;
  ExtremalBranch branch = ExtremalBranch::kBoth;
  /// The attaining constructions (one graph, or both on a tie); only built for n <= 64.
  std::vector<Graph> graphs;
};

/// Largest edge count of an n-vertex graph without k independent edges:
/// max{C(2k-1,2), C(k-1,2) + (k-1)(n-k+1)}. Requires n >= 2k, k >= 1.
std::int64_t ext_matching_value(std::int64_t n, std::int64_t k);
ExtremalBranch ext_matching_branch(std::int64_t n, std::int64_t k);

/// Value plus extremal graphs. Clique family: K_{2k-1} on vertices 0..2k-2 and
/// isolated rest. Join family: vertices 0..k-2 adjacent to everything.
ExtremalWitness ext_matching(int n, int k);

Graph clique_witness(int n, int k);
Graph join_witness(int n, int k);

/// Bipartite analogue m(k-1); requires m >= n_b >= k >= 1.
std::int64_t ext_bipartite_matching(std::int64_t m, std::int64_t n_b, std::int64_t k);

struct TwoKCase {
  std::int64_t value = 0;
  ExtremalBranch branch = ExtremalBranch::kBoth;
};

/// ext(2k, (k-1)K2) with the attaining term; the two terms differ by (k-2)(k-7)/2.
TwoKCase ext_2k_case(std::int64_t k);

/// Exhaustive maximum over all labeled graphs on n <= 7 vertices with matching number < k.
int brute_force_ext(int n, int k);

/// Exhaustive maximum over bipartite graphs with sides m and n_b (m * n_b <= 20)
/// and matching number < k.
int brute_force_ext_bipartite(int m, int n_b, int k);

}  // namespace matchrb
