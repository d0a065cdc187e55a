// Serial reference vs OpenMP kernels on the enumeration-heavy checks.

#include <benchmark/benchmark.h>

#include <random>

#include "rankcertify/cones.hpp"
#include "rankcertify/oracle.hpp"
#include "rankcertify/qualifications.hpp"
#include "rankcertify/stationarity.hpp"

using namespace rankcertify;

namespace {

ExecPolicy policy_of(const benchmark::State& st) {
  return st.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void label(benchmark::State& st) { st.SetLabel(st.range(0) == 0 ? "serial" : "parallel"); }

// n = 16, s = 2, r = 8: C(14, 6) = 3003 index sets.
void BM_FrechetEnumeration(benchmark::State& st) {
  const SvdPoint P = svd_point(oracle::random_rank_r(18, 16, 2, 1));
  const Matrix W = Matrix::Zero(18, 16);
  for (auto _ : st) benchmark::DoNotOptimize(in_frechet_RXr_by_enumeration(P, 8, W, kConeTol, policy_of(st)));
  label(st);
}
BENCHMARK(BM_FrechetEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NormalInTangent(benchmark::State& st) {
  const SvdPoint P = svd_point(oracle::random_rank_r(60, 40, 10, 2));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<Matrix> mats;
  for (int i = 0; i < 4; ++i) mats.push_back(Matrix::NullaryExpr(60, 40, [&] { return g(rng); }));
  const AffineSet S(60, 40, mats, Vector::Zero(4));
  for (auto _ : st) benchmark::DoNotOptimize(check_normal_in_tangent(P, S, 11, 1e-8, policy_of(st)));
  label(st);
}
BENCHMARK(BM_NormalInTangent)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

Problem quadratic_problem(Index m, Index n, Index r) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  const Index d = m * n;
  const Matrix M = Matrix::NullaryExpr(d, d, [&] { return g(rng); });
  Problem p;
  p.objective = quadratic_objective(M.transpose() * M / static_cast<double>(d),
                                    Matrix::NullaryExpr(m, n, [&] { return g(rng); }));
  p.constraints = AffineSet(m, n);
  p.rank = r;
  return p;
}

void BM_SecondOrderNecessary(benchmark::State& st) {
  const Problem p = quadratic_problem(8, 8, 5);
  const Matrix X = oracle::random_rank_r(8, 8, 2, 7);
  CertifyOptions opt;
  opt.policy = policy_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(second_order_necessary(p, X, Vector(0), opt));
  label(st);
}
BENCHMARK(BM_SecondOrderNecessary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SecondOrderSufficientSampling(benchmark::State& st) {
  const Problem p = quadratic_problem(8, 8, 5);
  const Matrix X = oracle::random_rank_r(8, 8, 4, 9);
  CertifyOptions opt;
  opt.policy = policy_of(st);
  opt.samples = 2000;
  for (auto _ : st) benchmark::DoNotOptimize(second_order_sufficient(p, X, Vector(0), opt));
  label(st);
}
BENCHMARK(BM_SecondOrderSufficientSampling)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
