#include "onetwo/cost_value.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

namespace onetwo {
namespace {

using CV = CostValue;

TEST(CostValue, FiniteArithmetic) {
  EXPECT_EQ(CV::finite(3) + CV::finite(4), CV::finite(7));
  EXPECT_EQ(CV::finite(0) + CV::finite(0), CV::finite(0));
  EXPECT_EQ(CV::finite(5).value(), 5u);
}

TEST(CostValue, InfinityAbsorbs) {
  EXPECT_EQ(kInfinity + CV::finite(3), kInfinity);
  EXPECT_EQ(CV::finite(3) + kInfinity, kInfinity);
  EXPECT_EQ(kInfinity + kInfinity, kInfinity);
  EXPECT_TRUE(kInfinity.is_infinite());
  EXPECT_THROW((void)kInfinity.value(), std::domain_error);
}

TEST(CostValue, OrderPutsInfinityLast) {
  EXPECT_LT(CV::finite(2), CV::finite(3));
  EXPECT_LT(CV::finite(1'000'000'000'000), kInfinity);
  EXPECT_FALSE(kInfinity < kInfinity);
  EXPECT_EQ(cv_min({CV::finite(2), kInfinity, CV::finite(1)}), CV::finite(1));
  EXPECT_EQ(cv_min({kInfinity, kInfinity}), kInfinity);
  EXPECT_THROW((void)cv_min(std::initializer_list<CV>{}), std::invalid_argument);
}

TEST(CostValue, ZeroIsNotInfinity) {
  EXPECT_NE(CV::finite(0), kInfinity);
  EXPECT_TRUE(CV::finite(0).is_finite());
  EXPECT_EQ(sizeof(CV), 8u);
}

TEST(CostValue, DifferenceAndOffset) {
  EXPECT_EQ(cv_difference(CV::finite(3), CV::finite(5)), -2);
  EXPECT_THROW((void)cv_difference(kInfinity, CV::finite(1)), std::domain_error);
  EXPECT_EQ(cv_offset(CV::finite(3), -3), CV::finite(0));
  EXPECT_EQ(cv_offset(kInfinity, -3), kInfinity);
  EXPECT_THROW((void)cv_offset(CV::finite(1), -2), std::domain_error);
}

TEST(CostValue, Printing) {
  std::ostringstream os;
  os << CV::finite(12) << ' ' << kInfinity;
  EXPECT_EQ(os.str(), "12 inf");
}

CV random_value(std::mt19937_64& rng) {
  if (rng() % 5 == 0) return kInfinity;
  return CV::finite(rng() % 1000);
}

TEST(CostValueProperty, MonoidLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const CV x = random_value(rng), y = random_value(rng), z = random_value(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x + CV::finite(0), x);
    EXPECT_EQ(cv_min({x, y}), cv_min({y, x}));
    EXPECT_EQ(cv_min({x, y}) + z, cv_min({x + z, y + z}));
    EXPECT_LE(x, x + y);
    if (x <= y) EXPECT_LE(x + z, y + z);
  }
}

}  // namespace
}  // namespace onetwo
