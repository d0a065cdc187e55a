#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rankcertify/cones.hpp"
#include "rankcertify/oracle.hpp"

using namespace rankcertify;
using namespace rankcertify::testing;

TEST(RandomRankR, RankAndSeeding) {
  EXPECT_EQ(svd_point(oracle::random_rank_r(5, 4, 1, 1)).rank(), 1);
  EXPECT_EQ(svd_point(oracle::random_rank_r(5, 4, 4, 2)).rank(), 4);
  EXPECT_EQ(oracle::random_rank_r(3, 3, 2, 9), oracle::random_rank_r(3, 3, 2, 9));
  EXPECT_NE(oracle::random_rank_r(3, 3, 2, 9), oracle::random_rank_r(3, 3, 2, 10));
}

TEST(ProjectionOracle, Examples) {
  const Matrix X = Vector((Vector(3) << 3, 2, 1).finished()).asDiagonal();
  EXPECT_GE(oracle::projection_oracle(X, 2, 20, 1), 1.0 - 1e-8);
  EXPECT_NEAR((X - project_rank(X, 2).point).norm(), 1.0, 1e-14);
  EXPECT_LE(oracle::projection_oracle(oracle::random_rank_r(4, 4, 2, 3), 2, 20, 1), 1e-8);
  EXPECT_EQ(oracle::projection_oracle(X, 2, 0, 1), kInfinity);
}

TEST(ProjectionOracle, NeverBeatsTruncatedSvd) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Index m = uniform_int(rng, 2, 6);
    const Index n = uniform_int(rng, 2, 6);
    const Index r = uniform_int(rng, 1, std::min(m, n));
    const Matrix X = gaussian(m, n, rng);
    const double d = (X - project_rank(X, r).point).norm();
    EXPECT_GE(oracle::projection_oracle(X, r, 10, rng()), d - 1e-8);
  }
}

TEST(SampleBouligand, MembershipAndStructure) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    const Index m = uniform_int(rng, 3, 6);
    const Index n = uniform_int(rng, 3, 6);
    const Index r = uniform_int(rng, 1, std::min(m, n) - 1);
    const Index s = uniform_int(rng, 0, r);
    const Matrix X = s == 0 ? Matrix::Zero(m, n) : oracle::random_rank_r(m, n, s, rng());
    const SvdPoint P = svd_point(X);
    for (const Matrix& xi : oracle::sample_bouligand(P, r, 10, rng())) {
      EXPECT_TRUE(in_bouligand_rank_set(P, r, xi, 1e-9));
      const Matrix W = P.to_working(xi);
      const Matrix block = P.u().rightCols(P.rows() - s).transpose() * W * P.v().rightCols(P.cols() - s);
      EXPECT_EQ(numerical_rank(block, 1e-10, xi.norm()), r - s);
      if (s == r) EXPECT_TRUE(in_tangent_fixed_rank(P, xi));
    }
  }
  EXPECT_TRUE(oracle::sample_bouligand(svd_point(Matrix::Identity(3, 3)), 3, 0, 1).empty());
}

TEST(FiniteDifferences, Examples) {
  std::mt19937_64 rng(23);
  const Matrix H = gaussian(3, 4, rng);
  const Objective f = frobenius_distance_objective(H);
  const Matrix X = gaussian(3, 4, rng);
  const Matrix Xi = gaussian(3, 4, rng);
  EXPECT_NEAR(oracle::fd_quadform(f, X, Xi), Xi.squaredNorm(), 1e-4 * Xi.squaredNorm());
  EXPECT_LE((oracle::fd_gradient(f, X) - (X - H)).norm(), 1e-6);

  Objective lin;
  const Matrix C = gaussian(3, 4, rng);
  lin.value = [C](const Matrix& Y) { return C.cwiseProduct(Y).sum(); };
  lin.gradient = [C](const Matrix&) { return C; };
  EXPECT_NEAR(oracle::fd_quadform(lin, X, Xi), 0.0, 1e-4);
  EXPECT_NEAR(oracle::default_step(Matrix::Zero(2, 2)), 1e-5, 1e-20);
}
