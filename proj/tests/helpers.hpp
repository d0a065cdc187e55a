#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rankcertify/affine.hpp"
#include "rankcertify/cones.hpp"
#include "rankcertify/matcore.hpp"
#include "rankcertify/oracle.hpp"
#include "rankcertify/problems.hpp"

namespace rankcertify::testing {

inline Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix M(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) M(i, j) = g(rng);
  }
  return M;
}

inline Index uniform_int(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix unit(Index m, Index n, Index i, Index j) {
  Matrix E = Matrix::Zero(m, n);
  E(i, j) = 1.0;
  return E;
}

/// The 3x3 Hankel instance: H = (e2, e1, e3), candidate (e2, e1, 0).
inline Matrix hankel3_H() {
  Matrix H = Matrix::Zero(3, 3);
  H(0, 1) = H(1, 0) = H(2, 2) = 1.0;
  return H;
}

inline Matrix hankel3_X() {
  Matrix X = Matrix::Zero(3, 3);
  X(0, 1) = X(1, 0) = 1.0;
  return X;
}

inline Problem lrr_identity(Index N, Index r) {
  return lrr_problem(std::vector<Matrix>(static_cast<std::size_t>(N), Matrix::Identity(N, N)), r);
}

/// A random quadratic instance with a feasible point X of rank s.
struct QuadraticCase {
  Problem prob;
  Matrix X;
  Index s = 0;
  bool constructed_stationary = false;
};

/// Builds f(X) = ½ vec(X)'Q vec(X) + <C, X> with random Q and l <= max_l random
/// constraints through X. When `stationary` is set, C is chosen so that
/// -∇f(X) - sum y_i A^i lies in the Fréchet normal cone of R(r) at X for a
/// random y (a nonzero normal-space element when s = r, zero when s < r).
inline QuadraticCase random_quadratic_case(std::mt19937_64& rng, Index max_dim, Index max_l,
                                           bool stationary, bool convex) {
  QuadraticCase c;
  Index m = uniform_int(rng, 2, max_dim);
  Index n = uniform_int(rng, 2, max_dim);
  const Index r = uniform_int(rng, 1, std::min(m, n) - 1);
  c.s = std::max<Index>(0, r - uniform_int(rng, 0, 1));
  c.X = c.s == 0 ? Matrix::Zero(m, n) : oracle::random_rank_r(m, n, c.s, rng());

  const Index l = uniform_int(rng, 0, max_l);
  std::vector<Matrix> mats;
  for (Index i = 0; i < l; ++i) mats.push_back(gaussian(m, n, rng));
  AffineSet S0(m, n, mats, Vector::Zero(l));
  const Vector b = apply(S0, c.X);
  AffineSet S(m, n, std::move(mats), b);

  const Index d = m * n;
  Matrix M = gaussian(d, d, rng);
  Matrix Q = M.transpose() * M / static_cast<double>(d);
  if (!convex) Q -= 0.5 * Matrix::Identity(d, d);

  Matrix C;
  if (stationary) {
    const SvdPoint P = svd_point(c.X);
    Matrix W = Matrix::Zero(m, n);
    if (c.s == r) W = project_normal_fixed_rank(P, gaussian(m, n, rng));
    const Vector y = gaussian(l, 1, rng);
    Matrix target = -W - adjoint(S, y);
    Matrix QX(m, n);
    QX.reshaped() = Q * c.X.reshaped();
    C = target - QX;
  } else {
    C = gaussian(m, n, rng);
  }
  c.prob.objective = quadratic_objective(Q, C);
  c.prob.constraints = std::move(S);
  c.prob.rank = r;
  c.prob.name = "quadratic";
  c.constructed_stationary = stationary;
  return c;
}

}  // namespace rankcertify::testing
