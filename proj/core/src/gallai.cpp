#include "matchrb/gallai.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace matchrb {

namespace {

// Kuhn matching of left vertices 0..L-1 into right vertices given as bitmasks.
// Returns assignment per left vertex or -1.
std::vector<int> saturate_left(const std::vector<std::uint64_t>& nbrs) {
  const int left = static_cast<int>(nbrs.size());
  std::vector<int> right_mate(64, -1);
  std::vector<int> left_mate(left, -1);
  for (int root = 0; root < left; ++root) {
    std::uint64_t visited = 0;
    std::function<bool(int)> try_augment = [&](int l) {
      for (std::uint64_t r = nbrs[l] & ~visited; r != 0; r &= r - 1) {
        const int j = std::countr_zero(r);
        visited |= std::uint64_t{1} << j;
        if (right_mate[j] == -1 || try_augment(right_mate[j])) {
          right_mate[j] = l;
          left_mate[l] = j;
          return true;
        }
      }
      return false;
    };
    try_augment(root);
  }
  return left_mate;
}

PropertyCheck make(char id, CheckStatus status, std::string detail,
                   std::vector<Vertex> witness = {}) {
  return PropertyCheck{id, status, std::move(detail), std::move(witness)};
}

nlohmann::ordered_json vertices_json(VertexMask m) { return to_vertices(m); }

}  // namespace

GEDecomposition decompose(const Graph& g) {
  GEDecomposition dec;
  const VertexMask all = g.vertices();
  dec.matching_number = matching_number(g, all);
  for (VertexMask s = all; s != 0; s &= s - 1) {
    const Vertex v = lowest(s);
    if (matching_number(g, all & ~bit(v)) == dec.matching_number) dec.d |= bit(v);
  }
  dec.a = g.neighbors(dec.d) & ~dec.d;
  dec.c = all & ~dec.d & ~dec.a;
  dec.d_components = g.components(dec.d);
  dec.c_components = g.components(dec.c);
  return dec;
}

VertexMask brute_force_d(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) throw GraphError("brute-force D is limited to 14 vertices");
  int best = -1;
  VertexMask missed = 0;
  // Each vertex is either left unmatched or matched to a later neighbour.
  std::function<void(VertexMask, VertexMask, int)> walk = [&](VertexMask undecided,
                                                             VertexMask unmatched, int size) {
    if (undecided == 0) {
      if (size > best) {
        best = size;
        missed = unmatched;
      } else if (size == best) {
        missed |= unmatched;
      }
      return;
    }
    const Vertex v = lowest(undecided);
    const VertexMask rest = undecided & ~bit(v);
    walk(rest, unmatched | bit(v), size);
    for (VertexMask nb = g.neighbors(v) & rest; nb != 0; nb &= nb - 1)
      walk(rest & ~bit(lowest(nb)), unmatched, size + 1);
  };
  walk(g.vertices(), 0, 0);
  return missed;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kPassVacuous:
      return "pass (vacuous)";
    case CheckStatus::kFail:
      return "fail";
  }
  return "?";
}

bool StructureReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::kFail) return false;
  return true;
}

StructureReport verify_structure(const Graph& g, const GEDecomposition& dec) {
  StructureReport report;
  const int n = g.vertex_count();
  const int nu = matching_number(g);
  report.matching_number = nu;

  // (a) D-components are factor-critical.
  if (dec.d == 0) {
    report.checks[0] = make('a', CheckStatus::kPassVacuous, "D is empty");
  } else {
    report.checks[0] = make('a', CheckStatus::kPass, "every D-component is factor-critical");
    for (VertexMask comp : dec.d_components) {
      if (!is_factor_critical(g, comp)) {
        report.checks[0] = make('a', CheckStatus::kFail, "D-component not factor-critical",
                                to_vertices(comp));
        break;
      }
    }
  }

  // (b) G[C] has a perfect matching.
  if (dec.c == 0) {
    report.checks[1] = make('b', CheckStatus::kPassVacuous, "C is empty");
  } else if (2 * matching_number(g, dec.c) == popcount(dec.c)) {
    report.checks[1] = make('b', CheckStatus::kPass, "G[C] has a perfect matching");
  } else {
    report.checks[1] =
        make('b', CheckStatus::kFail, "G[C] has no perfect matching", to_vertices(dec.c));
  }

  // Contracted bipartite graph: A against D-components.
  const std::vector<Vertex> a_list = to_vertices(dec.a);
  std::vector<std::uint64_t> comp_nbrs(a_list.size(), 0);
  for (std::size_t i = 0; i < a_list.size(); ++i)
    for (std::size_t j = 0; j < dec.d_components.size(); ++j)
      if (g.neighbors(a_list[i]) & dec.d_components[j]) comp_nbrs[i] |= std::uint64_t{1} << j;

  // (c) positive surplus viewed from A.
  if (dec.a == 0) {
    report.checks[2] = make('c', CheckStatus::kPassVacuous, "A is empty");
  } else if (a_list.size() <= 20) {
    report.checks[2] = make('c', CheckStatus::kPass, "|N(S)| > |S| for every nonempty S in A");
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << a_list.size()); ++sub) {
      std::uint64_t nbrs = 0;
      for (std::size_t i = 0; i < a_list.size(); ++i)
        if ((sub >> i) & 1U) nbrs |= comp_nbrs[i];
      if (std::popcount(nbrs) <= std::popcount(sub)) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < a_list.size(); ++i)
          if ((sub >> i) & 1U) s.push_back(a_list[i]);
        report.checks[2] = make('c', CheckStatus::kFail, "S in A with |N(S)| <= |S|", s);
        break;
      }
    }
  } else {
    // Surplus >= 1 iff doubling any single x in A still leaves A saturable.
    report.checks[2] = make('c', CheckStatus::kPass, "every doubled vertex of A is saturable");
    for (std::size_t x = 0; x < a_list.size(); ++x) {
      auto doubled = comp_nbrs;
      doubled.push_back(comp_nbrs[x]);
      const auto mates = saturate_left(doubled);
      if (std::find(mates.begin(), mates.end(), -1) != mates.end()) {
        report.checks[2] = make('c', CheckStatus::kFail, "surplus fails at doubled vertex",
                                {a_list[x]});
        break;
      }
    }
  }

  // (d) assemble a maximum matching from the structural pieces.
  {
    std::vector<Edge> built;
    std::string failure;
    const auto assign = saturate_left(comp_nbrs);
    std::vector<Vertex> avoid(dec.d_components.size(), -1);
    for (std::size_t i = 0; i < a_list.size() && failure.empty(); ++i) {
      if (assign[i] == -1) {
        failure = "vertex " + std::to_string(a_list[i]) + " of A not matched into D";
        break;
      }
      const Vertex x = lowest(g.neighbors(a_list[i]) & dec.d_components[assign[i]]);
      avoid[assign[i]] = x;
      built.emplace_back(a_list[i], x);
    }
    for (std::size_t j = 0; j < dec.d_components.size() && failure.empty(); ++j) {
      const Vertex skip = avoid[j] != -1 ? avoid[j] : lowest(dec.d_components[j]);
      try {
        auto part = near_perfect_matching_avoiding(g, dec.d_components[j], skip);
        built.insert(built.end(), part.edges.begin(), part.edges.end());
      } catch (const MatchingError& e) {
        failure = e.what();
      }
    }
    if (failure.empty() && dec.c != 0) {
      auto part = max_matching(g, dec.c);
      if (2 * part.size() != popcount(dec.c)) failure = "C has no perfect matching";
      built.insert(built.end(), part.edges.begin(), part.edges.end());
    }
    if (failure.empty() && !is_matching(built, &g)) failure = "assembled edges are not a matching";
    if (failure.empty() && static_cast<int>(built.size()) != nu)
      failure = "assembled matching has size " + std::to_string(built.size()) + ", expected " +
                std::to_string(nu);
    if (failure.empty()) {
      std::vector<Vertex> flat;
      std::sort(built.begin(), built.end());
      for (const Edge& e : built) {
        flat.push_back(e.u);
        flat.push_back(e.v);
      }
      if (dec.d == 0)
        report.checks[3] =
            make('d', CheckStatus::kPassVacuous, "D is empty; perfect matching of C", flat);
      else
        report.checks[3] =
            make('d', CheckStatus::kPass, "structured maximum matching found", flat);
    } else {
      report.checks[3] = make('d', CheckStatus::kFail, failure);
    }
  }

  // (e) nu = (|V| - q + s) / 2.
  const int rhs2 = n - dec.q() + dec.s();
  if (2 * nu == rhs2) {
    report.checks[4] = make('e', CheckStatus::kPass,
                            "nu = " + std::to_string(nu) + " = (" + std::to_string(n) + " - " +
                                std::to_string(dec.q()) + " + " + std::to_string(dec.s()) + ")/2");
  } else {
    report.checks[4] = make('e', CheckStatus::kFail,
                            "nu = " + std::to_string(nu) + " but (|V| - q + s)/2 = " +
                                std::to_string(rhs2) + "/2");
  }
  return report;
}

std::string decomposition_json(const GEDecomposition& dec) {
  nlohmann::ordered_json j;
  j["D"] = vertices_json(dec.d);
  j["A"] = vertices_json(dec.a);
  j["C"] = vertices_json(dec.c);
  j["q"] = dec.q();
  j["s"] = dec.s();
  j["matching_number"] = dec.matching_number;
  auto comps = nlohmann::ordered_json::array();
  for (VertexMask m : dec.d_components) comps.push_back(vertices_json(m));
  j["D_components"] = comps;
  comps = nlohmann::ordered_json::array();
  for (VertexMask m : dec.c_components) comps.push_back(vertices_json(m));
  j["C_components"] = comps;
  return j.dump(2);
}

std::string report_json(const StructureReport& report) {
  nlohmann::ordered_json j;
  j["matching_number"] = report.matching_number;
  j["all_pass"] = report.all_pass();
  auto props = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json p;
    p["property"] = std::string(1, c.id);
    p["status"] = to_string(c.status);
    p["detail"] = c.detail;
    p["witness"] = c.witness;
    props.push_back(p);
  }
  j["properties"] = props;
  return j.dump(2);
}

}  // namespace matchrb
