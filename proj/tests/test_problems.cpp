#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rankcertify/cones.hpp"
#include "rankcertify/errors.hpp"
#include "rankcertify/oracle.hpp"
#include "rankcertify/problems.hpp"
#include "rankcertify/qualifications.hpp"

using namespace rankcertify;
using namespace rankcertify::testing;

namespace {

Matrix cols3(const Vector& a, const Vector& b, const Vector& c) {
  Matrix M(3, 3);
  M << a, b, c;
  return M;
}

// Gradient and Hessian agreement with finite differences on random probes.
void expect_derivatives_match(const Objective& f, Index m, Index n, std::mt19937_64& rng,
                              int probes = 20) {
  for (int k = 0; k < probes; ++k) {
    const Matrix X = gaussian(m, n, rng);
    const Matrix G = f.gradient(X);
    const Matrix Gfd = oracle::fd_gradient(f, X);
    EXPECT_LE((G - Gfd).norm(), 1e-5 * (1 + G.norm()));
    if (!f.has_hessian()) continue;
    const Matrix Xi = gaussian(m, n, rng);
    const double q = f.quadform(X, Xi);
    const double qfd = oracle::fd_quadform(f, X, Xi);
    EXPECT_LE(std::abs(q - qfd), 1e-4 * (1 + std::abs(q)));
  }
}

VectorObjective small_vector_quadratic(std::mt19937_64& rng, Index n) {
  const Matrix M = gaussian(n, n, rng);
  return vector_quadratic(M.transpose() * M, gaussian(n, 1, rng));
}

}  // namespace

TEST(FrobeniusDistance, HankelValues) {
  const Objective f = frobenius_distance_objective(hankel3_H());
  EXPECT_EQ(f.value(hankel3_H()), 0.0);
  EXPECT_DOUBLE_EQ(f.value(hankel3_X()), 0.5);
  EXPECT_EQ(f.gradient(hankel3_X()), -unit(3, 3, 2, 2));
  EXPECT_TRUE(f.convex);
  std::mt19937_64 rng(1);
  const Matrix Xi = gaussian(3, 3, rng);
  EXPECT_NEAR(f.quadform(hankel3_X(), Xi), Xi.squaredNorm(), 1e-12);
}

TEST(HankelConstraints, ExplicitMatrices) {
  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);
  const Vector z = Vector::Zero(3);
  const AffineSet S = hankel_constraints(3, 3);
  ASSERT_EQ(S.size(), 4);
  EXPECT_EQ(S.mats()[0], cols3(e2, -e1, z));
  EXPECT_EQ(S.mats()[1], cols3(z, e2, -e1));
  EXPECT_EQ(S.mats()[2], cols3(e3, -e2, z));
  EXPECT_EQ(S.mats()[3], cols3(z, e3, -e2));
  EXPECT_EQ(S.rhs(), Vector::Zero(4));
}

TEST(HankelConstraints, IndependentUpToTwelve) {
  for (Index m = 1; m <= 12; ++m) {
    for (Index n = 1; n <= 12; ++n) {
      const AffineSet S = hankel_constraints(m, n);
      EXPECT_EQ(S.size(), (m - 1) * (n - 1));
      EXPECT_FALSE(S.redundant()) << m << "x" << n;
    }
  }
}

TEST(HankelProblem, Validation) {
  const Problem p = hankel_problem(hankel3_H(), 2);
  EXPECT_EQ(feasibility_residual(p.constraints, hankel3_X()), 0.0);
  EXPECT_THROW(hankel_problem(hankel3_H(), 3), InputError);
  EXPECT_THROW(hankel_problem(hankel3_H(), 0), InputError);
}

TEST(LrrProblem, IdentityData) {
  const Problem p = lrr_identity(4, 2);
  const Matrix Wbar = Matrix::Constant(4, 4, 0.25);
  EXPECT_LE((p.objective.gradient(Wbar) - Wbar).norm(), 1e-15);
  EXPECT_NEAR(p.objective.value(Wbar), 0.5, 1e-15);
  EXPECT_TRUE(p.objective.convex);
  Matrix W = Wbar;
  W(2, 0) += 0.1;
  EXPECT_FALSE(is_feasible(p.constraints, W));
  EXPECT_THROW(lrr_identity(4, 1), InputError);
  EXPECT_THROW(lrr_identity(4, 4), InputError);
}

TEST(LrrProblem, NonSymmetricDataUsesSymmetricPart) {
  std::mt19937_64 rng(4);
  std::vector<Matrix> B;
  for (int i = 0; i < 4; ++i) B.push_back(gaussian(4, 4, rng));
  const Problem p = lrr_problem(B, 2);
  expect_derivatives_match(p.objective, 4, 4, rng);
  EXPECT_FALSE(p.objective.convex);
}

TEST(QuadraticObjective, DerivativesAndConvexity) {
  std::mt19937_64 rng(6);
  const Index m = 3, n = 2, d = m * n;
  const Matrix M = gaussian(d, d, rng);
  const Objective convex = quadratic_objective(M.transpose() * M, gaussian(m, n, rng));
  EXPECT_TRUE(convex.convex);
  expect_derivatives_match(convex, m, n, rng);
  const Objective indefinite = quadratic_objective(M + M.transpose(), gaussian(m, n, rng));
  EXPECT_FALSE(indefinite.convex);
  expect_derivatives_match(indefinite, m, n, rng);
  EXPECT_THROW(quadratic_objective(Matrix::Identity(5, 5), Matrix::Zero(3, 2)), InputError);
}

TEST(Objective, PolarizationFallback) {
  std::mt19937_64 rng(9);
  const Objective f = frobenius_distance_objective(gaussian(3, 4, rng));
  const Matrix X = gaussian(3, 4, rng);
  const Matrix A = gaussian(3, 4, rng);
  const Matrix B = gaussian(3, 4, rng);
  EXPECT_NEAR(f.bilinear(X, A, B), A.cwiseProduct(B).sum(), 1e-10);
}

TEST(BuiltInObjectives, FiniteDifferenceAgreement) {
  std::mt19937_64 rng(10);
  expect_derivatives_match(frobenius_distance_objective(gaussian(4, 3, rng)), 4, 3, rng);
  expect_derivatives_match(lrr_identity(5, 2).objective, 5, 5, rng);
  std::vector<Vector> a{gaussian(4, 1, rng), gaussian(4, 1, rng)};
  const Problem diag = diagonal_problem(a, gaussian(2, 1, rng), 2, small_vector_quadratic(rng, 4));
  expect_derivatives_match(diag.objective, 4, 4, rng);
}

TEST(DiagonalProblem, Embedding) {
  std::mt19937_64 rng(13);
  const Vector a1 = (Vector(4) << 1, 1, 0, 0).finished();
  const Vector a2 = (Vector(4) << 0, 0, 1, 1).finished();
  const Problem p = diagonal_problem({a1, a2}, Vector::Ones(2), 2, small_vector_quadratic(rng, 4));
  EXPECT_EQ(p.structure, Structure::diagonal);
  EXPECT_EQ(p.constraints.mats()[0], Matrix(a1.asDiagonal()));

  const Vector x = (Vector(4) << 1, 0, 0, 1).finished();
  const Matrix X = x.asDiagonal();
  EXPECT_EQ(svd_point(X).rank(), 2);  // nonzeros of x
  EXPECT_NO_THROW(check_structure(p, X));
  Matrix off = X;
  off(0, 1) = 1e-3;
  EXPECT_THROW(check_structure(p, off), InputError);

  // At s < r the Fréchet normal cone of R(r) is {0}.
  const Matrix X1 = Vector((Vector(4) << 1, 0, 0, 0).finished()).asDiagonal();
  const SvdPoint P1 = svd_point(X1);
  EXPECT_TRUE(in_frechet_rank_set(P1, 2, Matrix::Zero(4, 4)));
  EXPECT_FALSE(in_frechet_rank_set(P1, 2, unit(4, 4, 3, 3)));

  // Qualification reduces to independence of the Γ-restricted diagonals.
  const QualificationReport q = qualify(svd_point(X), p.constraints, 2);
  EXPECT_TRUE(q.assumption2);
  const Problem dup = diagonal_problem({a1, a1 + Vector::Unit(4, 1)}, Vector::Ones(2), 2,
                                       small_vector_quadratic(rng, 4));
  // Restricted to Γ = {0, 3} both rows read (1, 0).
  EXPECT_FALSE(qualify(svd_point(X), dup.constraints, 2).assumption2);

  EXPECT_THROW(diagonal_problem({a1}, Vector::Ones(2), 2, small_vector_quadratic(rng, 4)),
               InputError);
  EXPECT_THROW(diagonal_problem({a1}, Vector::Ones(1), 4, small_vector_quadratic(rng, 4)),
               InputError);
}

TEST(CheckStructure, ShapeAndFiniteness) {
  const Problem p = hankel_problem(hankel3_H(), 2);
  EXPECT_THROW(check_structure(p, Matrix::Zero(3, 4)), InputError);
  Matrix X = hankel3_X();
  X(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(check_structure(p, X), InputError);
}
