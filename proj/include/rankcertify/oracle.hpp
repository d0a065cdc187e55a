#pragma once

#include <cstdint>
#include <vector>

#include "rankcertify/matcore.hpp"
#include "rankcertify/problems.hpp"

// Brute-force and finite-difference references for tests. Nothing in the
// library proper links against these.
namespace rankcertify::oracle {

/// Product of m x r and r x n standard normal factors.
Matrix random_rank_r(Index m, Index n, Index r, std::uint64_t seed);

/// Smallest ||X - C||_F over `trials` random rank-r starts, each refined by
/// 20 sweeps of alternating least squares. +inf when trials = 0.
double projection_oracle(const Matrix& X, Index r, int trials, std::uint64_t seed);

/// Random directions in the Bouligand tangent cone of R(r) at P: a tangent
/// part plus a normal part built from exactly r - s outer products.
/// Caller orientation.
std::vector<Matrix> sample_bouligand(const SvdPoint& P, Index r, int count, std::uint64_t seed);

/// Default step: 1e-5 * (1 + ||X||_F).
double default_step(const Matrix& X);

Matrix fd_gradient(const Objective& f, const Matrix& X, double h = -1.0);

/// Second central difference of f along Xi: [f(X+hXi) - 2f(X) + f(X-hXi)] / h².
double fd_quadform(const Objective& f, const Matrix& X, const Matrix& Xi, double h = -1.0);

}  // namespace rankcertify::oracle
