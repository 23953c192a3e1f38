#include "matchrb/gadgets.hpp"

#include <json.hpp>

#include <algorithm>

#include "matchrb/extremal.hpp"

namespace matchrb {

namespace {

class Painter {
 public:
  explicit Painter(int n) : n_(n), colors_(pair_count(n), 0) {}

  void set(Vertex u, Vertex v, Color c) { colors_[edge_index(n_, u, v)] = c; }
  bool has(Vertex u, Vertex v) const { return colors_[edge_index(n_, u, v)] != 0; }

  // Gives every uncolored edge inside `clique` (minus `skip`) a fresh color,
  // in lexicographic order, starting after the current maximum.
  void fresh_clique(Vertex first, Vertex last, Edge skip = Edge(-1, -2)) {
    Color next = *std::max_element(colors_.begin(), colors_.end()) + 1;
    for (Vertex u = first; u <= last; ++u)
      for (Vertex v = u + 1; v <= last; ++v)
        if (!has(u, v) && !(Edge(u, v) == skip)) set(u, v, next++);
  }

  void fill_free(Color c) {
    for (Color& x : colors_)
      if (x == 0) x = c;
  }

  // Maps the distinct nonzero colors onto 1..m keeping their numeric order.
  int compress() {
    std::vector<Color> distinct;
    for (Color c : colors_)
      if (c != 0) distinct.push_back(c);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Color& c : colors_)
      if (c != 0)
        c = static_cast<Color>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                               distinct.begin()) +
            1;
    return static_cast<int>(distinct.size());
  }

  std::vector<Color>& colors() { return colors_; }

 private:
  int n_;
  std::vector<Color> colors_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

GadgetColoring finish_total(GadgetColoring gc, Painter& p) {
  gc.colors = std::move(p.colors());
  gc.palette = normalize_colors(gc.colors);
  return gc;
}

GadgetColoring finish_partial(GadgetColoring gc, Painter& p) {
  gc.palette = p.compress();
  gc.colors = std::move(p.colors());
  return gc;
}

}  // namespace

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kSG1:
      return "SG1";
    case GadgetKind::kSG2a:
      return "SG2a";
    case GadgetKind::kSG2b:
      return "SG2b";
    case GadgetKind::kSG3:
      return "SG3";
    case GadgetKind::kLBGeneric:
      return "LB_GENERIC";
    case GadgetKind::kLB2K:
      return "LB_2K";
    case GadgetKind::kK4ThreePM:
      return "K4_3PM";
  }
  return "?";
}

GadgetKind parse_gadget_kind(const std::string& name) {
  for (GadgetKind k : {GadgetKind::kSG1, GadgetKind::kSG2a, GadgetKind::kSG2b, GadgetKind::kSG3,
                       GadgetKind::kLBGeneric, GadgetKind::kLB2K, GadgetKind::kK4ThreePM})
    if (name == to_string(k)) return k;
  throw DomainError("unknown gadget kind '" + name + "'");
}

bool GadgetColoring::is_total() const {
  return std::find(colors.begin(), colors.end(), 0) == colors.end();
}

EdgeColoring GadgetColoring::to_coloring() const {
  if (!is_total()) throw ColoringError(std::string(to_string(kind)) + " coloring is partial");
  return EdgeColoring(n, colors);
}

Graph GadgetColoring::colored_subgraph() const {
  Graph g(n);
  const auto pairs = all_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (colors[i] != 0) g.add_edge(pairs[i].u, pairs[i].v);
  return g;
}

std::vector<Edge> GadgetColoring::free_edges() const {
  std::vector<Edge> out;
  const auto pairs = all_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (colors[i] == 0) out.push_back(pairs[i]);
  return out;
}

GadgetColoring lower_bound_coloring(int n, int k) {
  require(k >= 2, "lower-bound coloring needs k >= 2");
  require(n >= 2 * k, "lower-bound coloring needs n >= 2k");
  require(n <= kMaxVertices, "lower-bound coloring limited to 64 vertices");
  GadgetColoring gc;
  gc.k = k;
  gc.n = n;
  Painter p(n);

  if (n == 4 && k == 2) {
    gc.kind = GadgetKind::kK4ThreePM;
    gc.construction = "three_perfect_matchings";
    gc.labels = {{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 3}};
    p.set(0, 1, 1);
    p.set(2, 3, 1);
    p.set(0, 2, 2);
    p.set(1, 3, 2);
    p.set(0, 3, 3);
    p.set(1, 2, 3);
    return finish_total(std::move(gc), p);
  }

  if (n == 2 * k && k >= 7) {
    gc.kind = GadgetKind::kLB2K;
    gc.construction = "clique_plus_three";
    const Vertex h_last = 2 * k - 4;
    const Vertex a1 = 2 * k - 3;
    const Vertex a2 = 2 * k - 2;
    const Vertex a3 = 2 * k - 1;
    gc.labels = {{"a1", a1}, {"a2", a2}, {"a3", a3}};
    p.set(a1, a2, 1);
    p.set(a1, a3, 2);
    p.set(a2, a3, 2);
    for (Vertex h = 0; h <= h_last; ++h) {
      p.set(a3, h, 1);
      p.set(a1, h, 2);
      p.set(a2, h, 2);
    }
    p.fresh_clique(0, h_last);
    return finish_total(std::move(gc), p);
  }

  gc.kind = GadgetKind::kLBGeneric;
  const bool use_clique = ext_matching_branch(n, k - 1) == ExtremalBranch::kClique;
  gc.construction = use_clique ? "clique" : "join";
  const Graph extremal = use_clique ? clique_witness(n, k - 1) : join_witness(n, k - 1);
  Color next = 1;
  for (const Edge& e : extremal.edges()) p.set(e.u, e.v, next++);
  p.fill_free(next);
  return finish_total(std::move(gc), p);
}

GadgetColoring gadget_coloring(GadgetKind kind, int k, int n) {
  require(k >= 3, "gadgets need k >= 3");
  require(n <= kMaxVertices, "gadgets limited to 64 vertices");
  GadgetColoring gc;
  gc.kind = kind;
  gc.k = k;
  gc.n = n;
  gc.construction = to_string(kind);
  Painter p(n);
  const Vertex clique_last = 2 * k - 4;  // K_{2k-3} on 0..2k-4
  const Vertex v1 = 2 * k - 3;
  const Vertex v2 = 2 * k - 2;
  const Vertex v3 = 2 * k - 1;

  switch (kind) {
    case GadgetKind::kSG1:
    case GadgetKind::kSG2a:
    case GadgetKind::kSG2b: {
      const bool sg1 = kind == GadgetKind::kSG1;
      require(n >= (sg1 ? 2 * k : 2 * k + 1),
              std::string(to_string(kind)) + " needs n >= " + (sg1 ? "2k" : "2k+1"));
      gc.labels = {{"u1", 0}, {"u2", 1}, {"u3", 2}, {"v1", v1}, {"v2", v2}, {"v3", v3}};
      if (!sg1) gc.labels.emplace_back("v4", 2 * k);
      // K_{2k-3}^- drops its last edge, or u1u3 when the clique is a triangle.
      Edge dropped(-1, -2);
      if (kind == GadgetKind::kSG2b) dropped = k == 3 ? Edge(0, 2) : Edge(clique_last - 1, clique_last);
      if (!(dropped == Edge(0, 1))) p.set(0, 1, 1);
      if (!(dropped == Edge(1, 2))) p.set(1, 2, 2);
      if (!(dropped == Edge(0, 2))) p.set(0, 2, 3);
      p.set(v1, v2, 4);
      p.set(v2, v3, 5);
      if (kind != GadgetKind::kSG2a) p.set(v1, v3, 6);
      p.fresh_clique(0, clique_last, dropped);
      return finish_partial(std::move(gc), p);
    }
    case GadgetKind::kSG3: {
      require(n >= 2 * k, "SG3 needs n >= 2k");
      const Vertex x = 0;
      const Vertex z = 1;
      const Vertex w = 2;
      const Vertex y = v1;
      const Vertex u = v2;
      const Vertex v = v3;
      gc.labels = {{"x", x}, {"y", y}, {"z", z}, {"w", w}, {"u", u}, {"v", v}};
      p.set(x, u, 1);
      p.set(x, v, 2);
      p.set(y, w, 3);
      p.set(y, z, 4);
      p.fresh_clique(0, clique_last, Edge(x, z));
      return finish_partial(std::move(gc), p);
    }
    default:
      throw DomainError(std::string(to_string(kind)) +
                        " is a lower-bound coloring; use lower_bound_coloring");
  }
}

EdgeColoring complete_gadget(const GadgetColoring& gc, const std::vector<Color>& assignment) {
  std::vector<Color> colors = gc.colors;
  std::size_t next = 0;
  for (Color& c : colors) {
    if (c != 0) continue;
    if (next >= assignment.size()) throw ColoringError("completion does not cover every free edge");
    const Color a = assignment[next++];
    if (a < 1 || a > gc.palette)
      throw ColoringError("fresh color " + std::to_string(a) + " outside the gadget palette 1.." +
                          std::to_string(gc.palette));
    c = a;
  }
  if (next != assignment.size()) throw ColoringError("completion has more colors than free edges");
  return EdgeColoring(gc.n, std::move(colors));
}

EdgeColoring complete_gadget(const GadgetColoring& gc, const std::map<Edge, Color>& assignment) {
  std::vector<Color> ordered;
  for (const Edge& e : gc.free_edges()) {
    auto it = assignment.find(e);
    if (it == assignment.end())
      throw ColoringError("free edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                          " not assigned");
    ordered.push_back(it->second);
  }
  if (ordered.size() != assignment.size())
    throw ColoringError("assignment colors an edge that is not free");
  return complete_gadget(gc, ordered);
}

std::string gadget_json(const GadgetColoring& gc) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(gc.kind);
  j["k"] = gc.k;
  j["n"] = gc.n;
  j["palette"] = gc.palette;
  j["construction"] = gc.construction;
  j["total"] = gc.is_total();
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [name, v] : gc.labels) labels[name] = v;
  j["labels"] = labels;
  auto edges = nlohmann::ordered_json::array();
  const auto pairs = all_pairs(gc.n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (gc.colors[i] != 0) edges.push_back({pairs[i].u, pairs[i].v, gc.colors[i]});
  j["colored_edges"] = edges;
  return j.dump(2);
}

}  // namespace matchrb
