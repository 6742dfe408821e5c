#include <bivar/nodes.hpp>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bivar {
namespace {

const Poly x1 = Poly::x1();
const Poly x2 = Poly::x2();
const NodeSet triangle({{0, 0}, {1, 0}, {0, 1}});

TEST(Nodes, DimPi) {
  EXPECT_EQ(dim_pi(0), 1);
  EXPECT_EQ(dim_pi(1), 3);
  EXPECT_EQ(dim_pi(5), 21);
  EXPECT_THROW(dim_pi(-1), DomainError);
}

TEST(Nodes, DuplicatesRejected) {
  EXPECT_THROW(NodeSet({{0, 0}, {1, 1}, {0, 0}}), DomainError);
}

TEST(Nodes, EqualityIgnoresOrder) {
  EXPECT_EQ(triangle, NodeSet({{0, 1}, {0, 0}, {1, 0}}));
  EXPECT_NE(triangle, NodeSet({{0, 1}, {0, 0}, {2, 0}}));
}

TEST(Nodes, Vandermonde) {
  EXPECT_EQ(vandermonde(NodeSet({{0, 0}}), 0), QMatrix(1, 1, Scalar(1)));
  EXPECT_EQ(determinant(vandermonde(triangle, 1)), 1);
  EXPECT_EQ(rank(vandermonde(NodeSet({{0, 0}, {1, 1}, {2, 2}}), 1)), 2u);
  // Column order: 1, x1, x2.
  EXPECT_EQ(vandermonde(NodeSet({{2, 3}}), 1).row(0), (std::vector<Scalar>{1, 2, 3}));
}

TEST(Nodes, Independence) {
  EXPECT_TRUE(is_independent(NodeSet({{Scalar(5, 7), 2}}), 0));
  EXPECT_FALSE(is_independent(NodeSet({{0, 0}, {1, 1}, {2, 2}}), 1));
  EXPECT_FALSE(is_independent(NodeSet({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 1));
  EXPECT_TRUE(is_independent(NodeSet({{0, 0}, {1, 0}}), 1));
}

TEST(Nodes, Poisedness) {
  EXPECT_TRUE(is_poised(triangle, 1));
  EXPECT_FALSE(is_poised(NodeSet({{0, 0}, {1, 0}, {2, 0}}), 1));
  EXPECT_FALSE(is_poised(NodeSet({{0, 0}, {1, 0}}), 1));
}

TEST(Nodes, LagrangeBasis) {
  auto single = lagrange_basis(NodeSet({{0, 0}}), 0);
  EXPECT_EQ(single[0], Poly(1));
  auto b = lagrange_basis(triangle, 1);
  EXPECT_EQ(b[0], 1 - x1 - x2);
  EXPECT_EQ(b[1], x1);
  EXPECT_EQ(b[2], x2);
  EXPECT_TRUE(kronecker_holds(b));
}

TEST(Nodes, NonPoisedBasisNamesRankDefect) {
  try {
    lagrange_basis(NodeSet({{0, 0}, {1, 0}, {2, 0}}), 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("rank defect 1"), std::string::npos);
  }
}

TEST(Nodes, Interpolate) {
  EXPECT_TRUE(interpolate(triangle, 1, std::vector<Scalar>{0, 0, 0}).is_zero());
  EXPECT_EQ(interpolate(triangle, 1, std::vector<Scalar>{1, 2, 3}), 1 + x1 + x2 * Scalar(2));
  std::map<Point, Scalar> partial{{{0, 0}, 1}};
  EXPECT_THROW(interpolate(triangle, 1, partial), DomainError);
  EXPECT_THROW(interpolate(NodeSet({{0, 0}, {1, 1}, {2, 2}}), 1, std::vector<Scalar>{1, 2, 3}), DomainError);
}

TEST(Nodes, ErrorOperator) {
  auto b = lagrange_basis(triangle, 1);
  EXPECT_TRUE(error_operator(b, x1 * Scalar(3) - x2 + 2).is_zero());
  EXPECT_EQ(error_operator(b, x1 * x1), x1 * x1 - x1);
  Poly e = error_operator(b, x1 * x1 * x2 + x2 * x2);
  EXPECT_EQ(error_operator(b, e), e);
}

NodeSet random_poised(Rng& rng, int n) {
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < dim_pi(n); ++i) pts.push_back(testing::random_point(rng, 6, 3));
    try {
      NodeSet y(pts);
      if (is_poised(y, n)) return y;
    } catch (const DomainError&) {
    }
  }
}

class NodeProperties : public ::testing::TestWithParam<int> {};

TEST_P(NodeProperties, ProjectorIdentities) {
  Rng rng(GetParam());
  for (int n = 0; n <= 3; ++n) {
    NodeSet y = random_poised(rng, n);
    auto b = lagrange_basis(y, n);
    EXPECT_TRUE(kronecker_holds(b));
    Poly sum;
    for (const auto& l : b.polys) sum += l;
    EXPECT_EQ(sum, Poly(1));
    for (int trial = 0; trial < 4; ++trial) {
      Poly p = testing::random_poly(rng, n + 3);
      Poly lp = interpolant_of(b, p), ep = error_operator(b, p);
      for (const auto& node : y) EXPECT_EQ(evaluate(ep, node), 0);
      EXPECT_EQ(interpolant_of(b, lp), lp);
      EXPECT_EQ(lp + ep, p);
      EXPECT_TRUE(lp.degree() <= n);
    }
    // Subsets of an independent set stay independent.
    std::vector<Point> subset;
    for (const auto& node : y)
      if (rng.uniform(0, 1)) subset.push_back(node);
    EXPECT_TRUE(is_independent(NodeSet(subset), n));
    EXPECT_TRUE(is_independent(y, n));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NodeProperties, ::testing::Range(1, 6));

}  // namespace
}  // namespace bivar
