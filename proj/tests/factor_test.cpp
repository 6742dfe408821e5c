#include <bivar/factor.hpp>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bivar {
namespace {

const Poly x1 = Poly::x1();
const Poly x2 = Poly::x2();

Poly multiply_back(const LinearFactorization& f) {
  Poly p = f.residual * f.scalar;
  for (const auto& k : f.factors) p *= k.to_poly();
  return p;
}

TEST(LinearFactors, ThreeLinesNormalizedAtZ) {
  Poly p = x1 * x2 * (x1 + x2 - 1);
  Point z{Scalar(1, 3), Scalar(1, 3)};
  auto f = linear_factors(p, z);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_TRUE(f.complete());
  for (const auto& k : f.factors) EXPECT_EQ(k(z), 1);
  EXPECT_EQ(multiply_back(f), p);
  // x1/(1/3), x2/(1/3), (x1+x2-1)/(-1/3)
  EXPECT_EQ(f.scalar, Scalar(-1, 27));
}

TEST(LinearFactors, PositiveQuadraticHasNone) {
  Poly p = x1 * x1 + x2 * x2 + 1;
  auto f = linear_factors(p);
  EXPECT_TRUE(f.factors.empty());
  EXPECT_EQ(f.residual, p);
  EXPECT_EQ(f.scalar, 1);
}

TEST(LinearFactors, RepeatedFactor) {
  Poly p = (x1 - x2) * (x1 - x2);
  auto f = linear_factors(p);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_TRUE(same_line(f.factors[0], {0, 1, -1}));
  EXPECT_EQ(f.factors[0], f.factors[1]);
  EXPECT_EQ(multiply_back(f), p);
}

TEST(LinearFactors, VerticalAndIrrationalSlopes) {
  // (x1 - 3) (x1^2 - 2 x2^2): only the vertical factor is rational.
  Poly p = (x1 - 3) * (x1 * x1 - x2 * x2 * Scalar(2));
  auto f = linear_factors(p);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_TRUE(same_line(f.factors[0], {-3, 1, 0}));
  EXPECT_EQ(f.residual.degree(), 2);
  EXPECT_EQ(multiply_back(f), p);
}

TEST(LinearFactors, ConstantHasNoFactors) {
  auto f = linear_factors(Poly(Scalar(5, 2)));
  EXPECT_TRUE(f.factors.empty());
  EXPECT_EQ(f.scalar, Scalar(5, 2));
  EXPECT_EQ(f.residual, Poly(1));
}

TEST(LinearFactors, RandomProductsOfLinesAreRecovered) {
  // Oracle: factors are known by construction.
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int count = static_cast<int>(rng.uniform(1, 6));
    Poly p(rng.nonzero_rational(9, 4));
    std::vector<LinearForm> lines;
    for (int i = 0; i < count; ++i) {
      LinearForm k{rng.rational(9, 5), rng.rational(6, 4), rng.rational(6, 4)};
      if (k.is_constant()) k.a2 = 1;
      lines.push_back(k.normalized());
      p *= k.to_poly();
    }
    if (trial % 3 == 0) p *= x1 * x1 + x2 * x2 + 1;
    auto f = linear_factors(p);
    EXPECT_EQ(multiply_back(f), p);
    ASSERT_EQ(f.factors.size(), lines.size());
    std::sort(lines.begin(), lines.end());
    EXPECT_EQ(f.factors, lines);
    EXPECT_EQ(f.complete(), trial % 3 != 0);
  }
}

}  // namespace
}  // namespace bivar
