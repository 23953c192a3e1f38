#include <gtest/gtest.h>

#include "matchrb/antiramsey.hpp"
#include "matchrb/extremal.hpp"
#include "matchrb/io.hpp"
#include "matchrb/rainbow.hpp"

namespace matchrb {
namespace {

TEST(RbFormula, Fixtures) {
  EXPECT_EQ(rb_formula(4, 2).rb, 4);
  EXPECT_EQ(rb_formula(4, 2).branch, RbBranch::kK4Special);
  EXPECT_EQ(rb_formula(5, 2).rb, 2);
  EXPECT_EQ(rb_formula(5, 2).branch, RbBranch::kK2Large);
  EXPECT_EQ(rb_formula(14, 7).rb, 58);
  EXPECT_EQ(rb_formula(14, 7).branch, RbBranch::kTwoKBigK);
  EXPECT_EQ(rb_formula(10, 4).rb, 19);
  EXPECT_EQ(rb_formula(6, 3).rb, 7);
  EXPECT_EQ(rb_formula(6, 3).f, 6);
  EXPECT_EQ(rb_formula(7, 3).rb, 8);
  EXPECT_EQ(rb_formula(3, 1).rb, 1);
  EXPECT_EQ(rb_formula(3, 1).branch, RbBranch::kK2Trivial);
  EXPECT_THROW(rb_formula(5, 3), DomainError);
  EXPECT_THROW(rb_formula(4, 0), DomainError);
}

TEST(RbFormula, BranchCoverage) {
  for (int k = 1; k <= 12; ++k) {
    for (int n = 2 * k; n <= 40; ++n) {
      const auto r = rb_formula(n, k);
      EXPECT_EQ(r.rb, r.f + 1);
      if (k == 1) {
        EXPECT_EQ(r.branch, RbBranch::kK2Trivial);
      } else if (n == 4 && k == 2) {
        EXPECT_EQ(r.branch, RbBranch::kK4Special);
      } else if (k == 2) {
        EXPECT_EQ(r.branch, RbBranch::kK2Large);
        EXPECT_EQ(r.rb, 2);
      } else if (n == 2 * k && k >= 7) {
        EXPECT_EQ(r.branch, RbBranch::kTwoKBigK);
        EXPECT_EQ(r.rb, choose2(2 * k - 3) + 3);
      } else {
        EXPECT_EQ(r.branch, RbBranch::kGeneric);
      }
    }
  }
}

// For n >= 3k+3 the closed form reduces to ext(n, (k-1)K2) + 2.
TEST(RbFormula, LargeNRegime) {
  for (int k = 2; k <= 10; ++k) {
    for (int n = 3 * k + 3; n <= 40; ++n) {
      const auto r = rb_formula(n, k);
      EXPECT_EQ(r.regime, Regime::kLargeN);
      EXPECT_EQ(r.rb, ext_matching_value(n, k - 1) + 2);
    }
    for (int n = 2 * k; n < 3 * k + 3; ++n) EXPECT_EQ(rb_formula(n, k).regime, Regime::kSmallN);
  }
}

// Prop 3.2 style upper bound: rb <= ext(n, kK2) + 1.
TEST(RbFormula, BelowTrivialUpperBound) {
  for (int k = 2; k <= 12; ++k)
    for (int n = 2 * k; n <= 40; ++n)
      EXPECT_LE(rb_formula(n, k).rb, ext_matching_value(n, k) + 1) << n << "," << k;
}

void expect_certificate(const OracleResult& r, int k) {
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->color_count(), r.f);
  const EdgeColoring again = parse_coloring(serialize_coloring(*r.certificate));
  EXPECT_FALSE(has_rainbow_k_matching(again, k).found);
}

TEST(ExactOracle, SmallCases) {
  const auto r42 = exact_f_oracle(4, 2);
  EXPECT_TRUE(r42.exact);
  EXPECT_EQ(r42.f, 3);
  expect_certificate(r42, 2);
  // The only 3-coloring of K4 without a rainbow 2K2, up to renaming.
  EXPECT_EQ(*r42.certificate, EdgeColoring(4, {1, 2, 3, 3, 2, 1}));

  const auto r52 = exact_f_oracle(5, 2);
  EXPECT_EQ(r52.f, 1);
  expect_certificate(r52, 2);

  const auto r63 = exact_f_oracle(6, 3);
  EXPECT_TRUE(r63.exact);
  EXPECT_EQ(r63.f, 6);
  expect_certificate(r63, 3);
}

TEST(ExactOracle, AgreesWithFormula) {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {4, 1}})
    EXPECT_EQ(exact_f_oracle(n, k).f + 1, rb_formula(n, k).rb) << n << "," << k;
}

TEST(ExactOracle, ThreadCountDoesNotChangeResult) {
  const auto a = exact_f_oracle(6, 3, kDefaultOracleBudget, 1);
  const auto b = exact_f_oracle(6, 3, kDefaultOracleBudget, 3);
  EXPECT_EQ(a.f, b.f);
  EXPECT_EQ(a.certificate, b.certificate);
}

TEST(ExactOracle, BudgetExhaustionIsFlagged) {
  const auto r = exact_f_oracle(6, 3, 1000);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.f, 6);
}

TEST(ExactOracle, KOneHasNoColoring) {
  const auto r = exact_f_oracle(3, 1);
  EXPECT_EQ(r.f, 0);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(VerifyLowerBound, Fixtures) {
  EXPECT_TRUE(verify_lower_bound(6, 3).ok);
  EXPECT_TRUE(verify_lower_bound(4, 2).ok);
  const auto big = verify_lower_bound(16, 8);
  EXPECT_TRUE(big.ok);
  EXPECT_EQ(big.colors, 80);
  EXPECT_TRUE(verify_lower_bound(5, 1).ok);
}

TEST(VerifyUpperBound, SampledSmall) {
  const auto r = verify_upper_bound_sampled(6, 3, 500, 1);
  EXPECT_EQ(r.trials, 500U);
  EXPECT_TRUE(r.ok());
  const auto again = verify_upper_bound_sampled(6, 3, 500, 1);
  EXPECT_EQ(again.rejected, r.rejected);
}

TEST(VerifyUpperBound, ExhaustiveFourTwo) {
  const auto r = verify_upper_bound_exhaustive(4, 2);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.trials, 65U);  // Stirling S(6,4)
  EXPECT_TRUE(r.ok());
}

TEST(RbTable, Rows) {
  const auto rows = rb_table(2, 5);
  ASSERT_EQ(rows.size(), 6U);
  EXPECT_EQ(rows[4].n, 4);
  EXPECT_EQ(rows[4].rb, 4);
  EXPECT_EQ(rows[5].rb, 2);
  const auto k1 = rb_table(1, 4);
  ASSERT_EQ(k1.size(), 3U);
  for (const auto& r : k1) EXPECT_EQ(r.rb, 1);
}

TEST(RbTable, CsvAndJson) {
  const std::string csv = table_csv(rb_table(3, 8));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,k,rb,f,branch,regime,lower_checked,oracle_checked,upper_sampled,certificate_path");
  EXPECT_NE(csv.find("6,3,7,6,GENERIC,small_n,false,false,false,\n"), std::string::npos);
  EXPECT_NE(csv.find("7,3,8,7,GENERIC,small_n"), std::string::npos);
  const std::string json = table_json(rb_table(1, 3));
  EXPECT_NE(json.find("\"branch\": \"K2_TRIVIAL\""), std::string::npos);
}

}  // namespace
}  // namespace matchrb
