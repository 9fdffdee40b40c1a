#include "gpa/alias_table.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace gpa {
namespace {

double total_variation(const std::vector<double>& p, const std::vector<std::size_t>& counts,
                       std::size_t draws) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    tv += std::abs(p[i] - static_cast<double>(counts[i]) / static_cast<double>(draws));
  }
  return tv / 2.0;
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  for (double& x : p) x = 1e-3 + uniform01(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= s;
  return p;
}

TEST(AliasTableTest, UniformIsIdentity) {
  const std::vector<double> p = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const AliasTable t = AliasTable::build(p);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(t.alias_prob()[i], 1.0);
    EXPECT_EQ(t.alias()[i], i);
  }
}

TEST(AliasTableTest, HandTracedExample) {
  const std::vector<double> p = {0.5, 0.25, 0.25};
  const AliasTable t = AliasTable::build(p);
  EXPECT_NEAR(t.alias_prob()[0], 1.0, 1e-12);
  EXPECT_NEAR(t.alias_prob()[1], 0.75, 1e-12);
  EXPECT_NEAR(t.alias_prob()[2], 0.75, 1e-12);
  EXPECT_EQ(t.alias()[0], 0u);
  EXPECT_EQ(t.alias()[1], 0u);
  EXPECT_EQ(t.alias()[2], 0u);
}

TEST(AliasTableTest, ImpliedDistributionIsExact) {
  Rng rng(11);
  for (int trial = 0; trial < 64; ++trial) {
    const auto p = random_distribution(1 + uniform_index(rng, 64), rng);
    const AliasTable t = AliasTable::build(p);
    const auto implied = t.implied_distribution();
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_GE(t.alias_prob()[i], 0.0);
      EXPECT_LE(t.alias_prob()[i], 1.0);
      EXPECT_LT(t.alias()[i], p.size());
      EXPECT_NEAR(implied[i], p[i], 1e-9);
    }
  }
}

TEST(AliasTableTest, RenormalizesUnnormalizedInput) {
  const std::vector<double> w = {2.0, 1.0, 1.0};
  const auto implied = AliasTable::build(w).implied_distribution();
  EXPECT_NEAR(implied[0], 0.5, 1e-12);
  EXPECT_NEAR(implied[1], 0.25, 1e-12);
}

TEST(AliasTableTest, RejectsBadInput) {
  EXPECT_THROW(AliasTable::build(std::vector<double>{}), DomainError);
  EXPECT_THROW(AliasTable::build(std::vector<double>{0.5, 0.0, 0.5}), DomainError);
  EXPECT_THROW(AliasTable::build(std::vector<double>{1.0, -1.0}), DomainError);
}

TEST(AliasTableTest, SingleElementAlwaysZero) {
  const AliasTable t = AliasTable::build(std::vector<double>{1.0});
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(t.sample(rng), 0u);
}

TEST(AliasTableTest, DrawsMatchTargetInTotalVariation) {
  const std::vector<double> p = {0.5, 0.25, 0.25};
  const AliasTable t = AliasTable::build(p);
  Rng rng(5);
  constexpr std::size_t kDraws = 1000000;
  std::vector<std::size_t> counts(3, 0);
  for (std::size_t i = 0; i < kDraws; ++i) ++counts[t.sample(rng)];
  EXPECT_LT(total_variation(p, counts, kDraws), 0.005);
}

TEST(AliasTableTest, UniformOverHundredPassesChiSquare) {
  const std::vector<double> p(100, 0.01);
  const AliasTable t = AliasTable::build(p);
  Rng rng(6);
  constexpr std::size_t kDraws = 1000000;
  std::vector<std::size_t> counts(100, 0);
  for (std::size_t i = 0; i < kDraws; ++i) {
    const std::size_t s = t.sample(rng);
    ASSERT_LT(s, 100u);
    ++counts[s];
  }
  const double expected = kDraws / 100.0;
  double chi2 = 0.0;
  for (std::size_t c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // Upper 0.001 quantile of chi-square with 99 degrees of freedom.
  EXPECT_LT(chi2, 148.23);
}

TEST(AliasTableTest, DeterministicForSeed) {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  const AliasTable t = AliasTable::build(p);
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(t.sample(a), t.sample(b));
}

}  // namespace
}  // namespace gpa
