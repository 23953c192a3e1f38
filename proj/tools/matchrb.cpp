// matchrb: rainbow numbers for matchings, extremal constructions and checkers.
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cache.hpp"
#include "matchrb/antiramsey.hpp"
#include "matchrb/extremal.hpp"
#include "matchrb/gadgets.hpp"
#include "matchrb/gallai.hpp"
#include "matchrb/io.hpp"
#include "matchrb/rainbow.hpp"

namespace {

using namespace matchrb;
using cli::ResultCache;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string cache_flag;
  std::string format = "text";
  std::uint64_t seed = 1;
  int threads = 1;
};

std::string edge_list(const EdgeColoring& col, const Matching& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = m.edges[i];
    out << (i ? " " : "") << e.u << '-' << e.v << ":c" << col.color(e.u, e.v);
  }
  return out.str();
}

std::string vertex_set(VertexMask m) {
  std::string s = "{";
  bool first = true;
  for (Vertex v : to_vertices(m)) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + "}";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file_atomic(out_path, text);
}

std::string render_rows(const std::vector<RbRecord>& rows, const std::string& format) {
  return format == "json" ? table_json(rows) : table_csv(rows);
}

/// Cached verification flags survive a fresh formula evaluation.
RbRecord merged(const ResultCache& cache, int n, int k) {
  RbRecord r = rb_formula(n, k);
  if (auto hit = cache.find(n, k)) {
    r.lower_checked = hit->record.lower_checked;
    r.oracle_checked = hit->record.oracle_checked;
    r.upper_sampled = hit->record.upper_sampled;
    r.certificate_path = hit->record.certificate_path;
  }
  return r;
}

ResultCache open_cache(const Globals& g) {
  ResultCache cache(cli::resolve_cache_path(g.cache_flag));
  cache.load();
  return cache;
}

// ---- commands ---------------------------------------------------------------

int cmd_rb(const Globals& g, int n, int k) {
  ResultCache cache = open_cache(g);
  const RbRecord r = merged(cache, n, k);
  if (!cache.find(n, k)) {
    cache.put(r);
    cache.save();
  }
  if (g.format == "text")
    std::cout << "rb(" << n << ", " << k << "K2) = " << r.rb << "\nf = " << r.f
              << "\nbranch = " << to_string(r.branch) << "\nregime = " << to_string(r.regime)
              << "\n";
  else
    std::cout << render_rows({r}, g.format);
  return kOk;
}

int cmd_table(const Globals& g, int k_max, int n_max, bool from_cache, const std::string& out) {
  std::vector<RbRecord> rows = rb_table(k_max, n_max);
  if (from_cache) {
    const ResultCache cache = open_cache(g);
    for (auto& r : rows) r = merged(cache, r.n, r.k);
  }
  emit(render_rows(rows, g.format == "json" ? "json" : "csv"), out);
  return kOk;
}

int cmd_oracle(const Globals& g, int n, int k, std::uint64_t budget, const std::string& cert) {
  const OracleResult res = exact_f_oracle(n, k, budget, g.threads);
  RbRecord r = rb_formula(n, k);
  std::cout << "f=" << res.f << (res.exact ? "" : " (lower bound, budget exhausted)")
            << "\nnodes=" << res.nodes << "\n";
  if (!cert.empty() && res.certificate) {
    write_file_atomic(cert, serialize_coloring(*res.certificate));
    std::cout << "certificate written to " << cert << "\n";
  }
  if (!res.exact) return kOk;
  if (res.f != r.f) {
    std::cerr << "oracle disagrees with formula: f=" << res.f << ", formula f=" << r.f << "\n";
    if (!cert.empty()) std::cerr << "counterexample: " << cert << "\n";
    return kVerifyFailed;
  }
  ResultCache cache = open_cache(g);
  r = merged(cache, n, k);
  r.oracle_checked = true;
  if (!cert.empty()) r.certificate_path = cert;
  cache.put(r);
  cache.save();
  return kOk;
}

int cmd_construct(int n, int k, const std::string& gadget, const std::string& out) {
  GadgetColoring gc = gadget.empty() ? lower_bound_coloring(n, k)
                                     : gadget_coloring(parse_gadget_kind(gadget), k, n);
  const std::string sidecar = gadget_json(gc);
  if (out.empty()) {
    if (gc.is_total()) std::cout << serialize_coloring(gc.to_coloring());
    std::cout << sidecar;
    return kOk;
  }
  if (gc.is_total()) {
    write_file_atomic(out, serialize_coloring(gc.to_coloring()));
    write_file_atomic(out + ".json", sidecar);
    std::cout << "wrote " << out << " and " << out << ".json (" << gc.palette << " colors, "
              << gc.construction << ")\n";
  } else {
    write_file_atomic(out, sidecar);
    std::cout << "wrote " << out << " (partial coloring, " << gc.free_edges().size()
              << " free edges, palette " << gc.palette << ")\n";
  }
  return kOk;
}

int cmd_check(const std::string& path, std::optional<int> k) {
  const EdgeColoring col = parse_coloring(read_file(path));
  const RainbowResult best = max_rainbow_matching(col);
  std::cout << "max rainbow matching " << best.size;
  if (k) {
    if (best.size >= *k)
      std::cout << "; rainbow " << *k << "K2 present";
    else
      std::cout << "; no rainbow " << *k << "K2";
  }
  std::cout << "\nwitness: " << edge_list(col, best.witness) << "\n";
  return kOk;
}

int cmd_decompose(const std::string& path) {
  const Graph g = parse_graph(read_file(path));
  const GEDecomposition dec = decompose(g);
  const StructureReport report = verify_structure(g, dec);
  std::cout << "D=" << vertex_set(dec.d) << " A=" << vertex_set(dec.a)
            << " C=" << vertex_set(dec.c) << "\n"
            << decomposition_json(dec) << "\n"
            << report_json(report) << "\n";
  return report.all_pass() ? kOk : kVerifyFailed;
}

int cmd_verify(const Globals& g, int k_max, int n_max, std::uint64_t trials,
               const std::string& out, const std::string& cx_dir) {
  ResultCache cache = open_cache(g);
  std::vector<RbRecord> rows;
  std::vector<std::string> failures;
  for (const RbRecord& base : rb_table(k_max, n_max)) {
    const int n = base.n;
    const int k = base.k;
    RbRecord r = merged(cache, n, k);
    const std::string tag = std::to_string(n) + "_" + std::to_string(k);
    if (k >= 2) {
      const LowerBoundCheck lb = verify_lower_bound(n, k);
      r.lower_checked = lb.ok;
      if (!lb.ok && lb.coloring && lb.coloring->is_total()) {
        const std::string p = (std::filesystem::path(cx_dir) / ("lower_" + tag + ".col")).string();
        write_file_atomic(p, serialize_coloring(lb.coloring->to_coloring()));
        failures.push_back(p);
      } else if (!lb.ok) {
        failures.push_back("lower bound (" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    } else {
      r.lower_checked = true;
    }
    if (trials > 0 && r.rb <= choose2(n)) {
      const UpperBoundReport ub = verify_upper_bound_sampled(n, k, trials, g.seed);
      r.upper_sampled = ub.ok();
      if (!ub.ok()) {
        const std::string p = (std::filesystem::path(cx_dir) / ("upper_" + tag + ".col")).string();
        write_file_atomic(p, serialize_coloring(ub.counterexamples.front()));
        failures.push_back(p);
      }
    }
    rows.push_back(r);
    cache.put(r);
  }
  cache.save();
  emit(render_rows(rows, g.format == "json" ? "json" : "csv"), out);
  for (const auto& f : failures) std::cerr << "verification failed; counterexample: " << f << "\n";
  return failures.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow numbers of matchings: formula, constructions and verifiers"};
  app.set_version_flag("--version", MATCHRB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cache", g.cache_flag, "Results cache (default $RAINBOW_CACHE or ./rb_cache.json)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--threads", g.threads, "Oracle worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);

  int n = 0, k = 0, k_max = 0, n_max = 0;
  std::uint64_t budget = kDefaultOracleBudget, trials = 1000;
  std::string out, cert, gadget, coloring_path, graph_path, cx_dir = ".";
  std::optional<int> check_k;
  bool from_cache = false;

  auto* rb = app.add_subcommand("rb", "Evaluate rb(n, kK2) by formula");
  rb->add_option("--n", n)->required();
  rb->add_option("--k", k)->required();

  auto* table = app.add_subcommand("table", "Tabulate rb for k <= k-max, 2k <= n <= n-max");
  table->add_option("--k-max", k_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--out", out, "Output file (default stdout)");
  table->add_flag("--from-cache", from_cache, "Merge verification flags from the cache");

  auto* oracle = app.add_subcommand("oracle", "Exact f(n, kK2) by exhaustive search (n <= 7)");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--k", k)->required();
  oracle->add_option("--budget", budget, "Search node limit");
  oracle->add_option("--cert", cert, "Write the optimal coloring here");

  auto* construct = app.add_subcommand("construct", "Build a lower-bound coloring or a gadget");
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--gadget", gadget, "SG1, SG2a, SG2b or SG3 (partial coloring)");
  construct->add_option("--out", out, "Coloring file; a .json sidecar is written next to it");

  auto* check = app.add_subcommand("check", "Maximum rainbow matching of a coloring");
  check->add_option("--coloring", coloring_path)->required();
  check->add_option("--k", check_k, "Report whether a rainbow kK2 exists");

  auto* decomp = app.add_subcommand("decompose", "Gallai-Edmonds decomposition with self-check");
  decomp->add_option("--graph", graph_path)->required();

  auto* verify = app.add_subcommand("verify", "Lower- and upper-bound checks over a grid");
  verify->add_option("--k-max", k_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials, "Sampled colorings per (n,k)");
  verify->add_option("--out", out, "Summary file (default stdout)");
  verify->add_option("--counterexample-dir", cx_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (g.threads == 0) g.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  try {
    if (*rb) return cmd_rb(g, n, k);
    if (*table) return cmd_table(g, k_max, n_max, from_cache, out);
    if (*oracle) return cmd_oracle(g, n, k, budget, cert);
    if (*construct) return cmd_construct(n, k, gadget, out);
    if (*check) return cmd_check(coloring_path, check_k);
    if (*decomp) return cmd_decompose(graph_path);
    if (*verify) return cmd_verify(g, k_max, n_max, trials, out, cx_dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
