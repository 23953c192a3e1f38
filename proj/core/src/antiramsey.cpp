#include "matchrb/antiramsey.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "matchrb/extremal.hpp"
#include "matchrb/rainbow.hpp"

namespace matchrb {

namespace {

// Exhaustive restricted-growth search behind exact_f_oracle.
class OracleSearch {
 public:
  OracleSearch(int n, int k) : n_(n), k_(k), m_(pair_count(n)), ending_at_(m_) {
    // Every k-matching of K_n as edge indices, filed under its last edge.
    const auto pairs = all_pairs(n);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from, VertexMask used) -> void {
      if (static_cast<int>(chosen.size()) == k_) {
        auto& bucket = ending_at_[chosen.back()];
        bucket.insert(bucket.end(), chosen.begin(), chosen.end());
        return;
      }
      for (int i = from; i < m_; ++i) {
        if (used & pairs[i].mask()) continue;
        chosen.push_back(i);
        self(self, i + 1, used | pairs[i].mask());
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0);
    colors_.assign(m_, 0);
  }

  int edge_count() const { return m_; }

  // True if coloring edge i completed a rainbow kK2 among edges 0..i.
  bool closes_rainbow(int i) const {
    const auto& bucket = ending_at_[i];
    for (std::size_t b = 0; b < bucket.size(); b += k_) {
      bool distinct = true;
      for (int x = 0; x < k_ && distinct; ++x)
        for (int y = x + 1; y < k_; ++y)
          if (colors_[bucket[b + x]] == colors_[bucket[b + y]]) {
            distinct = false;
            break;
          }
      if (distinct) return true;
    }
    return false;
  }

  void run(int start, int max_color) { dfs(start, max_color); }

  std::vector<Color> colors_;
  std::vector<Color> best_colors;
  int best = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted = false;
  const std::atomic<int>* shared_best = nullptr;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;

 private:
  void dfs(int i, int max_color) {
    if (i == m_) {
      if (max_color > best) {
        best = max_color;
        best_colors = colors_;
      }
      return;
    }
    const int reachable = max_color + (m_ - i);
    if (reachable <= best) return;
    if (shared_best != nullptr && reachable < shared_best->load(std::memory_order_relaxed)) return;
    for (Color c = 1; c <= max_color + 1; ++c) {
      if (exhausted) return;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      if (shared_nodes != nullptr && (nodes & 0xFFFU) == 0) {
        if (shared_nodes->fetch_add(0x1000, std::memory_order_relaxed) + 0x1000 > budget) {
          exhausted = true;
          return;
        }
      }
      colors_[i] = c;
      if (!closes_rainbow(i)) dfs(i + 1, std::max(max_color, c));
    }
    colors_[i] = 0;
  }

  int n_;
  int k_;
  int m_;
  std::vector<std::vector<int>> ending_at_;
};

struct Prefix {
  std::vector<Color> colors;
  int max_color = 0;
};

// Valid (rainbow-free) restricted-growth prefixes of the given length, in lexicographic order.
std::vector<Prefix> oracle_prefixes(OracleSearch& probe, int length) {
  std::vector<Prefix> out;
  std::vector<Color> cur;
  auto rec = [&](auto&& self, int i, int max_color) -> void {
    if (i == length) {
      out.push_back({cur, max_color});
      return;
    }
    for (Color c = 1; c <= max_color + 1; ++c) {
      cur.push_back(c);
      probe.colors_[i] = c;
      if (!probe.closes_rainbow(i)) self(self, i + 1, std::max(max_color, c));
      cur.pop_back();
    }
    probe.colors_[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

const char* to_string(RbBranch b) {
  switch (b) {
    case RbBranch::kK2Trivial:
      return "K2_TRIVIAL";
    case RbBranch::kK4Special:
      return "K4_SPECIAL";
    case RbBranch::kK2Large:
      return "K2_LARGE";
    case RbBranch::kTwoKBigK:
      return "TWO_K_BIG_K";
    case RbBranch::kGeneric:
      return "GENERIC";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kTrivial:
      return "trivial";
    case Regime::kLargeN:
      return "large_n";
    case Regime::kSmallN:
      return "small_n";
  }
  return "?";
}

RbBranch parse_branch(const std::string& s) {
  for (RbBranch b : {RbBranch::kK2Trivial, RbBranch::kK4Special, RbBranch::kK2Large,
                     RbBranch::kTwoKBigK, RbBranch::kGeneric})
    if (s == to_string(b)) return b;
  throw DomainError("unknown branch '" + s + "'");
}

Regime parse_regime(const std::string& s) {
  for (Regime r : {Regime::kTrivial, Regime::kLargeN, Regime::kSmallN})
    if (s == to_string(r)) return r;
  throw DomainError("unknown regime '" + s + "'");
}

Regime regime_of(int n, int k) {
  if (k == 1) return Regime::kTrivial;
  return n >= 3 * k + 3 ? Regime::kLargeN : Regime::kSmallN;
}

RbRecord rb_formula(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw DomainError("rb(n, kK2) needs k >= 1 and n >= 2k (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  RbRecord r;
  r.n = n;
  r.k = k;
  r.regime = regime_of(n, k);
  if (k == 1) {
    r.rb = 1;
    r.branch = RbBranch::kK2Trivial;
  } else if (n == 4 && k == 2) {
    r.rb = 4;
    r.branch = RbBranch::kK4Special;
  } else if (k == 2) {
    r.rb = ext_matching_value(n, 1) + 2;
    r.branch = RbBranch::kK2Large;
  } else if (n == 2 * k && k >= 7) {
    r.rb = ext_matching_value(n, k - 1) + 3;
    r.branch = RbBranch::kTwoKBigK;
  } else {
    r.rb = ext_matching_value(n, k - 1) + 2;
    r.branch = RbBranch::kGeneric;
  }
  r.f = r.rb - 1;
  return r;
}

OracleResult exact_f_oracle(int n, int k, std::uint64_t budget, int threads) {
  if (k < 1 || n < 2 * k) throw DomainError("oracle needs k >= 1 and n >= 2k");
  if (n > 7) throw DomainError("oracle is limited to n <= 7");
  OracleResult result;

  if (threads <= 1) {
    OracleSearch search(n, k);
    search.budget = budget;
    search.run(0, 0);
    result.f = search.best;
    result.exact = !search.exhausted;
    result.nodes = search.nodes;
    if (search.best > 0) result.certificate = EdgeColoring(n, search.best_colors);
    return result;
  }

  OracleSearch probe(n, k);
  const int depth = std::min(3, probe.edge_count());
  const auto prefixes = oracle_prefixes(probe, depth);
  struct TaskResult {
    int best = 0;
    std::vector<Color> colors;
    std::uint64_t nodes = 0;
    bool exhausted = false;
  };
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<int> shared_best{0};
  std::atomic<std::uint64_t> shared_nodes{0};
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    OracleSearch local(n, k);
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= prefixes.size()) return;
      local.best = 0;
      local.best_colors.clear();
      local.nodes = 0;
      local.exhausted = false;
      local.budget = budget;
      local.shared_best = &shared_best;
      local.shared_nodes = &shared_nodes;
      std::fill(local.colors_.begin(), local.colors_.end(), 0);
      std::copy(prefixes[t].colors.begin(), prefixes[t].colors.end(), local.colors_.begin());
      local.run(depth, prefixes[t].max_color);
      results[t] = {local.best, local.best_colors, local.nodes, local.exhausted};
      int seen = shared_best.load();
      while (local.best > seen && !shared_best.compare_exchange_weak(seen, local.best)) {
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // The first task (in prefix order) reaching the overall maximum holds the
  // lexicographically least optimal coloring.
  int best = 0;
  for (const auto& r : results) best = std::max(best, r.best);
  result.f = best;
  for (const auto& r : results) {
    result.nodes += r.nodes;
    result.exact = result.exact && !r.exhausted;
  }
  if (best > 0) {
    for (const auto& r : results) {
      if (r.best == best) {
        result.certificate = EdgeColoring(n, r.colors);
        break;
      }
    }
  }
  return result;
}

LowerBoundCheck verify_lower_bound(int n, int k) {
  const RbRecord rec = rb_formula(n, k);
  LowerBoundCheck out;
  out.expected_colors = rec.rb - 1;
  if (k == 1) {
    out.ok = true;
    return out;
  }
  GadgetColoring gc = lower_bound_coloring(n, k);
  const EdgeColoring col = gc.to_coloring();
  out.colors = col.color_count();
  auto q = has_rainbow_k_matching(col, k);
  out.rainbow_found = q.found;
  out.witness = q.witness;
  out.coloring = std::move(gc);
  out.ok = out.colors == out.expected_colors && !out.rainbow_found;
  return out;
}

UpperBoundReport verify_upper_bound_sampled(int n, int k, std::uint64_t trials,
                                            std::uint64_t seed) {
  const RbRecord rec = rb_formula(n, k);
  const int m = pair_count(n);
  if (rec.rb > m) throw DomainError("rb exceeds the number of edges of K_n");
  UpperBoundReport report;
  report.n = n;
  report.k = k;
  report.rb = rec.rb;
  const int palette = static_cast<int>(rec.rb);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, palette);
  std::vector<Color> colors(m);
  std::vector<std::uint8_t> seen(palette + 1);
  RainbowSolver solver;
  while (report.trials < trials) {
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    for (Color& c : colors) {
      c = pick(rng);
      if (!seen[c]) {
        seen[c] = 1;
        ++distinct;
      }
    }
    if (distinct != palette) {
      ++report.rejected;
      continue;
    }
    ++report.trials;
    solver.reset(n, colors, palette);
    if (!solver.find(k)) report.counterexamples.emplace_back(n, colors);
  }
  return report;
}

UpperBoundReport verify_upper_bound_exhaustive(int n, int k) {
  const RbRecord rec = rb_formula(n, k);
  const int m = pair_count(n);
  if (n > 5) throw DomainError("exhaustive upper-bound check limited to n <= 5");
  if (rec.rb > m) throw DomainError("rb exceeds the number of edges of K_n");
  UpperBoundReport report;
  report.n = n;
  report.k = k;
  report.rb = rec.rb;
  report.exhaustive = true;
  const int palette = static_cast<int>(rec.rb);
  std::vector<Color> colors(m, 0);
  RainbowSolver solver;
  auto rec_fn = [&](auto&& self, int i, int max_color) -> void {
    if (max_color + (m - i) < palette) return;
    if (i == m) {
      ++report.trials;
      solver.reset(n, colors, palette);
      if (!solver.find(k)) report.counterexamples.emplace_back(n, colors);
      return;
    }
    for (Color c = 1; c <= std::min(max_color + 1, palette); ++c) {
      colors[i] = c;
      self(self, i + 1, std::max(max_color, c));
    }
  };
  rec_fn(rec_fn, 0, 0);
  return report;
}

std::vector<RbRecord> rb_table(int k_max, int n_max) {
  std::vector<RbRecord> rows;
  for (int k = 1; k <= k_max; ++k)
    for (int n = 2 * k; n <= n_max; ++n) rows.push_back(rb_formula(n, k));
  return rows;
}

std::string table_csv(const std::vector<RbRecord>& rows) {
  std::ostringstream out;
  out << "n,k,rb,f,branch,regime,lower_checked,oracle_checked,upper_sampled,certificate_path\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.rb << ',' << r.f << ',' << to_string(r.branch) << ','
        << to_string(r.regime) << ',' << flag(r.lower_checked) << ',' << flag(r.oracle_checked)
        << ',' << flag(r.upper_sampled) << ',' << r.certificate_path << '\n';
  }
  return out.str();
}

std::string table_json(const std::vector<RbRecord>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["rb"] = r.rb;
    j["f"] = r.f;
    j["branch"] = to_string(r.branch);
    j["regime"] = to_string(r.regime);
    j["lower_checked"] = r.lower_checked;
    j["oracle_checked"] = r.oracle_checked;
    j["upper_sampled"] = r.upper_sampled;
    j["certificate_path"] = r.certificate_path;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace matchrb
