#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rankcertify/qualifications.hpp"

using namespace rankcertify;
using namespace rankcertify::testing;

namespace {

// X̄ with the completion U = I, V = (e2, e1, e3).
SvdPoint hankel3_point() {
  Matrix V = Matrix::Zero(3, 3);
  V(1, 0) = V(0, 1) = V(2, 2) = 1.0;
  return SvdPoint::from_factors(hankel3_X(), Matrix::Identity(3, 3), V);
}

SvdPoint cone5x4_point() {
  Matrix X0 = Matrix::Zero(5, 4);
  X0(0, 0) = X0(1, 1) = 1.0;
  return SvdPoint::from_factors(X0, Matrix::Identity(5, 5), Matrix::Identity(4, 4));
}

AffineSet cone5x4_set() {
  return AffineSet(5, 4, {unit(5, 4, 0, 0), unit(5, 4, 1, 1)}, Vector::Ones(2));
}

Matrix cols3(const Vector& a, const Vector& b, const Vector& c) {
  Matrix M(3, 3);
  M << a, b, c;
  return M;
}

double stack_sigma_min(const std::vector<Matrix>& mats) {
  Matrix stack(static_cast<Index>(mats.size()), mats.front().size());
  for (std::size_t i = 0; i < mats.size(); ++i) stack.row(static_cast<Index>(i)) = mats[i].reshaped().transpose();
  Eigen::BDCSVD<Matrix> svd(stack);
  return svd.singularValues()(static_cast<Index>(mats.size()) - 1);
}

}  // namespace

TEST(BuildTR, HankelBlocks) {
  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);
  const Vector z = Vector::Zero(3);
  const ProjectedConstraints tr = build_TR(hankel3_point(), hankel_constraints(3, 3));
  ASSERT_EQ(tr.T.size(), 4u);
  const std::vector<Matrix> expected{cols3(-e1, e2, z), cols3(e2, z, -e1), cols3(-e2, e3, z),
                                     cols3(e3, z, -e2)};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE((tr.T[i] - expected[i]).norm(), 1e-14) << i;
  EXPECT_TRUE(check_assumption(tr.T).independent);
}

TEST(BuildTR, ComplementBlockVanishes) {
  const AffineSet S(3, 3, {unit(3, 3, 2, 2)}, Vector::Ones(1));
  const ProjectedConstraints tr = build_TR(hankel3_point(), S);
  EXPECT_EQ(tr.T[0].norm(), 0.0);
  EXPECT_EQ(tr.R[0].norm(), 0.0);
}

TEST(BuildTR, Cone5x4RBlocks) {
  const ProjectedConstraints tr = build_TR(cone5x4_point(), cone5x4_set());
  Matrix r1 = Matrix::Zero(2, 2), r2 = Matrix::Zero(2, 2);
  r1(0, 0) = 1;
  r2(1, 1) = 1;
  EXPECT_EQ(tr.R[0].topLeftCorner(2, 2), r1);
  EXPECT_EQ(tr.R[1].topLeftCorner(2, 2), r2);
  EXPECT_EQ(tr.R[0].norm(), 1.0);
  const IndependenceCheck c = check_assumption(tr.R);
  EXPECT_TRUE(c.independent);
  EXPECT_NEAR(c.sigma_min, 1.0, 1e-14);
}

TEST(CheckAssumption, EmptyAndDuplicated) {
  const IndependenceCheck empty = check_assumption({});
  EXPECT_TRUE(empty.independent);
  EXPECT_EQ(empty.sigma_min, kInfinity);
  const Matrix A = unit(2, 2, 0, 1);
  EXPECT_FALSE(check_assumption({A, A}).independent);
}

TEST(DimensionConditions, Examples) {
  const auto hk = check_dimension_conditions(svd_point(hankel3_X()), hankel_constraints(3, 3));
  EXPECT_TRUE(hk.first);
  EXPECT_TRUE(hk.second);
  const auto none = check_dimension_conditions(svd_point(Matrix::Zero(3, 3)), AffineSet(3, 3));
  EXPECT_TRUE(none.first);
  EXPECT_TRUE(none.second);
  const AffineSet one(3, 3, {unit(3, 3, 0, 0)}, Vector::Ones(1));
  EXPECT_FALSE(check_dimension_conditions(svd_point(Matrix::Zero(3, 3)), one).second);
}

TEST(NormalInTangent, Examples) {
  EXPECT_EQ(check_normal_in_tangent(cone5x4_point(), cone5x4_set(), 3), Verdict::holds);
  const AffineSet S(4, 4, {Matrix::Ones(4, 4)}, Vector::Ones(1));
  EXPECT_EQ(check_normal_in_tangent(svd_point(unit(4, 4, 0, 0)), S, 3), Verdict::holds);
  EXPECT_EQ(check_normal_in_tangent(hankel3_point(), hankel_constraints(3, 3), 2),
            Verdict::not_applicable);
  // A constraint that sees an off-diagonal unit of the cone.
  const AffineSet bad(5, 4, {unit(5, 4, 2, 3)}, Vector::Zero(1));
  EXPECT_EQ(check_normal_in_tangent(cone5x4_point(), bad, 3), Verdict::fails);
}

TEST(FrechetBasis, SizesAndMembership) {
  const SvdPoint P = cone5x4_point();
  const std::vector<Matrix> basis = frechet_RXr_basis(P, 3);
  EXPECT_EQ(basis.size(), 2u + 4u);  // (n-s)(n-s-1) + (m-n)n
  for (const Matrix& B : basis) EXPECT_TRUE(in_frechet_RXr(P, 3, B).member);
  EXPECT_TRUE(frechet_RXr_basis(svd_point(unit(4, 4, 0, 0)), 3).empty());
}

TEST(Qualify, Hankel3) {
  const QualificationReport q = qualify(svd_point(hankel3_X()), hankel_constraints(3, 3), 2);
  EXPECT_TRUE(q.assumption1);
  EXPECT_TRUE(q.dim_ok_1);
  EXPECT_TRUE(q.dim_ok_2);
  EXPECT_EQ(q.normal_in_tangent, Verdict::not_applicable);
}

TEST(Qualify, RandomInstanceProperties) {
  std::mt19937_64 rng(53);
  int both = 0;
  for (int t = 0; t < 100; ++t) {
    const Index m = uniform_int(rng, 2, 6);
    const Index n = uniform_int(rng, 2, 6);
    const Index s = uniform_int(rng, 1, std::min(m, n) - 1);
    const Index r = uniform_int(rng, s, std::min(m, n) - 1);
    const SvdPoint P = svd_point(oracle::random_rank_r(m, n, s, rng()));
    const Index l = uniform_int(rng, 1, s * s + 1);
    std::vector<Matrix> mats;
    for (Index i = 0; i < l; ++i) mats.push_back(gaussian(m, n, rng));
    if (t % 7 == 0 && l > 1) mats[1] = 2.0 * mats[0];
    const AffineSet S(m, n, mats, Vector::Zero(l));
    const QualificationReport q = qualify(P, S, r);
    if (q.assumption2) {
      EXPECT_TRUE(q.assumption1);
      EXPECT_TRUE(q.dim_ok_2);
      ++both;
    }
    if (q.assumption1) EXPECT_TRUE(q.dim_ok_1);

    std::vector<Matrix> scaled;
    for (const Matrix& A : mats) scaled.push_back(-3.5 * A);
    const QualificationReport qs = qualify(P, AffineSet(m, n, scaled, Vector::Zero(l)), r);
    EXPECT_EQ(qs.assumption1, q.assumption1);
    EXPECT_EQ(qs.assumption2, q.assumption2);

    const ProjectedConstraints tr = build_TR(P, S);
    EXPECT_NEAR(q.sigma_min_T, stack_sigma_min(tr.T), 1e-10);
    EXPECT_NEAR(q.sigma_min_R, stack_sigma_min(tr.R), 1e-10);
  }
  EXPECT_GT(both, 10);
}
