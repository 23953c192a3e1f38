#pragma once

#include <array>
#include <string>
#include <vector>

#include "matchrb/graph.hpp"
#include "matchrb/matching.hpp"

namespace matchrb {

/// Canonical Gallai–Edmonds partition of V(G).
///   D: vertices missed by at least one maximum matching
///   A: vertices outside D with a neighbour in D
///   C: everything else
struct GEDecomposition {
  VertexMask d = 0;
  VertexMask a = 0;
  VertexMask c = 0;
  std::vector<VertexMask> d_components;  ///< odd sizes, ordered by smallest vertex
  std::vector<VertexMask> c_components;  ///< even sizes, ordered by smallest vertex
  int matching_number = 0;

  int q() const { return static_cast<int>(d_components.size()); }
  int s() const { return popcount(a); }

  friend bool operator==(const GEDecomposition&, const GEDecomposition&) = default;
};

/// Computes D by deletion probes: v is in D iff nu(G - v) == nu(G).
GEDecomposition decompose(const Graph& g);

/// D by enumerating every matching of g. Guarded to at most 14 vertices.
VertexMask brute_force_d(const Graph& g);

enum class CheckStatus { kPass, kPassVacuous, kFail };

const char* to_string(CheckStatus s);

struct PropertyCheck {
  char id = '?';  ///< 'a'..'e'
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
  std::vector<Vertex> witness;  ///< offending vertices on failure, else supporting data
};

struct StructureReport {
  std::array<PropertyCheck, 5> checks;
  int matching_number = 0;

  bool all_pass() const;
};

/// Checks the five structure properties (a)–(e) of `dec` against `g`.
StructureReport verify_structure(const Graph& g, const GEDecomposition& dec);

/// JSON documents for the CLI: the partition alone, and the report.
std::string decomposition_json(const GEDecomposition& dec);
std::string report_json(const StructureReport& report);

}  // namespace matchrb
