#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchrb/coloring.hpp"
#include "matchrb/gadgets.hpp"
#include "matchrb/matching.hpp"

namespace matchrb {

/// Which case of the closed form produced rb(n, kK2).
enum class RbBranch {
  kK2Trivial,  ///< k = 1
  kK4Special,  ///< (n, k) = (4, 2)
  kK2Large,    ///< k = 2, n >= 5
  kTwoKBigK,   ///< n = 2k, k >= 7
  kGeneric,    ///< ext(n, (k-1)K2) + 2
};

/// Whether (n, k) was already covered by the n >= 3k+3 result.
enum class Regime {
  kTrivial,    ///< k = 1
  kLargeN,     ///< n >= 3k + 3 ("large_n")
  kSmallN,     ///< 2k <= n < 3k + 3 ("small_n")
};

const char* to_string(RbBranch b);
const char* to_string(Regime r);
RbBranch parse_branch(const std::string& s);
Regime parse_regime(const std::string& s);

struct RbRecord {
  int n = 0;
  int k = 0;
  std::int64_t rb = 0;
  std::int64_t f = 0;  ///< rb - 1
  RbBranch branch = RbBranch::kGeneric;
  Regime regime = Regime::kTrivial;
  bool lower_checked = false;
  bool oracle_checked = false;
  bool upper_sampled = false;
  std::string certificate_path;

  friend bool operator==(const RbRecord&, const RbRecord&) = default;
};

/// Closed-form rainbow number of kK2 in K_n; requires k >= 1 and n >= 2k.
RbRecord rb_formula(int n, int k);

Regime regime_of(int n, int k);

struct OracleResult {
  int f = 0;
  bool exact = true;          ///< false when the node budget ran out
  std::optional<EdgeColoring> certificate;  ///< absent only when f = 0
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 5'000'000'000ULL;

/// Maximum number of colors on K_n with no rainbow kK2, by exhaustive search
/// over restricted-growth colorings of the lexicographic edge order.
/// Prefixes that already contain a rainbow kK2 are cut, as are prefixes whose
/// color count plus remaining edges cannot beat the incumbent. Among optimal
/// colorings the lexicographically least string is returned. `threads > 1`
/// splits the search over the colorings of the first edges; the result does
/// not depend on the thread count. Requires 2k <= n <= 7.
OracleResult exact_f_oracle(int n, int k, std::uint64_t budget = kDefaultOracleBudget,
                            int threads = 1);

struct LowerBoundCheck {
  bool ok = false;
  std::int64_t expected_colors = 0;  ///< rb - 1
  int colors = 0;
  bool rainbow_found = false;
  std::optional<Matching> witness;  ///< the rainbow kK2, if one was found
  std::optional<GadgetColoring> coloring;
};

/// Builds lower_bound_coloring(n, k) and confirms it has rb - 1 colors and no
/// rainbow kK2. k = 1 passes vacuously (f = 0).
LowerBoundCheck verify_lower_bound(int n, int k);

struct UpperBoundReport {
  int n = 0;
  int k = 0;
  std::int64_t rb = 0;
  std::uint64_t trials = 0;     ///< colorings checked
  std::uint64_t rejected = 0;   ///< non-surjective samples discarded
  bool exhaustive = false;
  std::vector<EdgeColoring> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Draws `trials` surjective colorings of K_n with exactly rb colors (each edge
/// uniform in 1..rb, non-surjective draws rejected) and checks each for a
/// rainbow kK2.
UpperBoundReport verify_upper_bound_sampled(int n, int k, std::uint64_t trials,
                                            std::uint64_t seed);

/// Every coloring of K_n with exactly rb colors, up to renaming; n <= 5.
UpperBoundReport verify_upper_bound_exhaustive(int n, int k);

/// All (n, k) with 1 <= k <= k_max and 2k <= n <= n_max, ordered by k then n.
std::vector<RbRecord> rb_table(int k_max, int n_max);

std::string table_csv(const std::vector<RbRecord>& rows);
std::string table_json(const std::vector<RbRecord>& rows);

}  // namespace matchrb
