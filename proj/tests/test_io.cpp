#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rankcertify/errors.hpp"
#include "rankcertify/io.hpp"

using namespace rankcertify;
using namespace rankcertify::testing;
using rankcertify::io::Json;

TEST(Json, MatrixRoundTrip) {
  std::mt19937_64 rng(1);
  const Matrix M = gaussian(3, 5, rng);
  const Json j = io::matrix_to_json(M);
  EXPECT_EQ(j["rows"], 3);
  EXPECT_EQ(j["data"].size(), 3u);
  EXPECT_EQ(io::matrix_from_json(io::parse_json(j.dump())), M);
}

TEST(Json, RaggedAndNonFiniteRejected) {
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"rows":2,"cols":2,"data":[[1,2],[3]]})")),
               InputError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"rows":1,"cols":1,"data":[["x"]]})")),
               InputError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"rows":1,"cols":2,"data":[[1,2,3]]})")),
               InputError);
}

TEST(Json, SyntaxErrorsCarryLineAndColumn) {
  try {
    io::parse_json("{\n  \"a\": [1, 2,\n}", "problem.json");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("problem.json"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
  }
}

TEST(Json, AffineRoundTrip) {
  const AffineSet S = hankel_constraints(3, 4);
  const AffineSet T = io::affine_from_json(io::affine_to_json(S));
  ASSERT_EQ(T.size(), S.size());
  for (Index i = 0; i < S.size(); ++i) EXPECT_EQ(T.mats()[i], S.mats()[i]);
  EXPECT_EQ(T.rhs(), S.rhs());
  EXPECT_THROW(io::affine_from_json(io::parse_json(R"({"constraints": []})")), InputError);
  EXPECT_EQ(io::affine_from_json(io::parse_json(R"({"rows":2,"cols":3,"constraints":[]})")).cols(), 3);
}

TEST(Json, ProblemTypes) {
  const Problem h = io::problem_from_json(io::parse_json(
      R"({"type":"hankel","rank":1,"params":{"signal":[1,2,3,4],"rows":2}})"));
  EXPECT_EQ(h.rows(), 2);
  EXPECT_EQ(h.cols(), 3);
  EXPECT_EQ(h.constraints.size(), 2);

  const Problem l = io::problem_from_json(io::parse_json(R"({"type":"lrr","rank":2,"params":{"N":4}})"));
  EXPECT_NEAR(l.objective.value(Matrix::Constant(4, 4, 0.25)), 0.5, 1e-15);

  const Problem q = io::problem_from_json(io::parse_json(R"({
    "type":"quadratic","rank":1,
    "params":{"Q":{"rows":4,"cols":4,"data":[[1,0,0,0],[0,2,0,0],[0,0,3,0],[0,0,0,4]]},
              "C":{"rows":2,"cols":2,"data":[[0,0],[0,0]]}}})"));
  Matrix X = Matrix::Zero(2, 2);
  X(1, 0) = 1.0;  // second entry of the column-major vec
  EXPECT_NEAR(q.objective.value(X), 1.0, 1e-15);

  const Problem d = io::problem_from_json(io::parse_json(R"({
    "type":"diagonal","rank":1,
    "params":{"a":[[1,1,1]],"b":[1],"Q":{"rows":3,"cols":3,"data":[[1,0,0],[0,1,0],[0,0,1]]},"c":[0,0,0]}})"));
  EXPECT_EQ(d.structure, Structure::diagonal);

  EXPECT_THROW(io::problem_from_json(io::parse_json(R"({"type":"cubic","rank":1,"params":{}})")),
               InputError);
  EXPECT_THROW(io::problem_from_json(io::parse_json(R"({"type":"lrr","params":{"N":4}})")),
               InputError);
}

TEST(Json, PointForms) {
  const Json bare = io::matrix_to_json(hankel3_X());
  Json wrapped;
  wrapped["point"] = bare;
  EXPECT_EQ(io::point_from_json(bare), hankel3_X());
  EXPECT_EQ(io::point_from_json(wrapped), hankel3_X());
}

TEST(Json, AlmParams) {
  const ALMParams p = io::alm_params_from_json(io::parse_json(R"({"rho":2,"max_outer":5})"));
  EXPECT_EQ(p.rho, 2.0);
  EXPECT_EQ(p.max_outer, 5);
  EXPECT_EQ(p.armijo, ALMParams{}.armijo);
  EXPECT_THROW(io::alm_params_from_json(io::parse_json(R"({"rhoo":2})")), InputError);
}

TEST(Json, CertificateRoundTrip) {
  const Certificate c = classify(hankel_problem(hankel3_H(), 2), hankel3_X());
  const Json j = io::certificate_to_json(c);
  const Certificate back = io::certificate_from_json(io::parse_json(j.dump()));
  EXPECT_EQ(back, c);
  // Stable field order.
  auto it = j.begin();
  EXPECT_EQ(it.key(), "feasible");
  EXPECT_EQ(j.back().is_array(), true);

  const Certificate inf = classify(lrr_identity(4, 2), Matrix::Constant(4, 4, 0.25));
  const Json ji = io::certificate_to_json(inf);
  EXPECT_TRUE(ji["beta"].is_null());
  EXPECT_EQ(io::certificate_from_json(ji), inf);
}

TEST(Json, QualificationRoundTrip) {
  QualificationReport q;
  q.assumption1 = true;
  q.sigma_min_R = 0.25;
  q.normal_in_tangent = Verdict::fails;
  EXPECT_EQ(io::qualification_from_json(io::qualification_to_json(q)), q);
}

TEST(Text, CertificateMentionsKeyFields) {
  const Certificate c = classify(hankel_problem(hankel3_H(), 2), hankel3_X());
  const std::string text = io::certificate_text(c);
  EXPECT_NE(text.find("beta"), std::string::npos);
  EXPECT_NE(text.find("restricted_to_RXGamma"), std::string::npos);
}
