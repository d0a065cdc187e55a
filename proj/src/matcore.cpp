#include "rankcertify/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rankcertify/errors.hpp"

namespace rankcertify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "not_applicable";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "not_applicable") return Verdict::not_applicable;
  throw InputError("unknown verdict '" + std::string(s) + "'");
}

bool all_finite(const Matrix& M) { return M.allFinite(); }

namespace {

constexpr double kTieTol = 1e-12;

// Largest-magnitude entry of each column of U made positive; the matching
// column of V (if any) flips with it.
void fix_signs(Matrix& U, Matrix& V) {
  for (Index j = 0; j < U.cols(); ++j) {
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < U.rows(); ++i) {
      const double a = std::abs(U(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (U(best, j) < 0.0) {
      U.col(j) *= -1.0;
      if (j < V.cols()) V.col(j) *= -1.0;
    }
  }
}

// Within a cluster of equal nonzero singular values the singular vectors are
// only defined up to a rotation. Replace the cluster's U columns by a greedy
// Gram-Schmidt basis of their span taken along the coordinate axes (largest
// residual first, lowest index on ties) and rebuild V from X^T U / sigma, so
// the choice depends only on the subspace.
void canonicalize_ties(const Matrix& X, const Vector& sigma, Matrix& U, Matrix& V) {
  const Index n = sigma.size();
  if (n == 0) return;
  const double s1 = sigma[0];
  const double tie = kTieTol * s1;
  const double floor = 1e-14 * s1;
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && sigma[end - 1] - sigma[end] <= tie) ++end;
    const Index k = end - start;
    if (k > 1 && sigma[end - 1] > floor) {
      const Matrix Uc = U.middleCols(start, k);
      const Matrix proj = Uc * Uc.transpose();
      Matrix basis(U.rows(), k);
      std::vector<bool> used(static_cast<std::size_t>(U.rows()), false);
      for (Index c = 0; c < k; ++c) {
        Vector best;
        double best_norm = -1.0;
        Index best_i = -1;
        for (Index i = 0; i < U.rows(); ++i) {
          if (used[static_cast<std::size_t>(i)]) continue;
          Vector w = proj.col(i);
          for (int pass = 0; pass < 2; ++pass) {
            w -= basis.leftCols(c) * (basis.leftCols(c).transpose() * w);
          }
          const double nw = w.norm();
          if (nw > best_norm * (1.0 + 1e-10)) {
            best_norm = nw;
            best = w;
            best_i = i;
          }
        }
        used[static_cast<std::size_t>(best_i)] = true;
        basis.col(c) = best / best_norm;
      }
      U.middleCols(start, k) = basis;
      Matrix Vc = X.transpose() * basis;
      for (Index c = 0; c < k; ++c) Vc.col(c) /= sigma[start + c];
      Eigen::HouseholderQR<Matrix> qr(Vc);
      Matrix Q = qr.householderQ() * Matrix::Identity(Vc.rows(), k);
      // Keep the orientation of X^T u / sigma; QR only removes rounding.
      for (Index c = 0; c < k; ++c) {
        if (Q.col(c).dot(Vc.col(c)) < 0.0) Q.col(c) *= -1.0;
      }
      V.middleCols(start, k) = Q;
    }
    start = end;
  }
}

}  // namespace

Index numerical_rank(const Vector& sigma, double rank_tol, double reference,
                     double abs_floor) {
  if (sigma.size() == 0) return 0;
  const double ref = reference < 0.0 ? sigma.maxCoeff() : reference;
  const double threshold = rank_tol * std::max(ref, abs_floor);
  Index count = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > threshold) ++count;
  }
  return count;
}

Index numerical_rank(const Matrix& M, double rank_tol, double reference, double abs_floor) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return numerical_rank(Vector(svd.singularValues()), rank_tol, reference, abs_floor);
}

SvdPoint svd_point(const Matrix& X, RankTolerances tol) {
  if (!all_finite(X)) throw InputError("svd_point: matrix has non-finite entries");
  if (tol.rank_tol <= 0.0) throw InputError("svd_point: rank_tol must be positive");

  SvdPoint p;
  p.transposed_ = X.rows() < X.cols();
  p.x_ = p.transposed_ ? Matrix(X.transpose()) : X;
  p.tol_ = tol;

  const Index m = p.x_.rows();
  const Index n = p.x_.cols();
  if (n == 0) {
    p.u_ = Matrix::Identity(m, m);
    p.v_ = Matrix(0, 0);
    p.sigma_ = Vector(0);
    return p;
  }

  Eigen::JacobiSVD<Matrix> svd(p.x_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  p.u_ = svd.matrixU();
  p.v_ = svd.matrixV();
  p.sigma_ = svd.singularValues();
  canonicalize_ties(p.x_, p.sigma_, p.u_, p.v_);
  fix_signs(p.u_, p.v_);
  p.s_ = numerical_rank(p.sigma_, tol.rank_tol, -1.0, tol.abs_floor);
  return p;
}

SvdPoint SvdPoint::from_factors(const Matrix& X, const Matrix& U, const Matrix& V,
                                RankTolerances tol) {
  if (!all_finite(X) || !all_finite(U) || !all_finite(V)) {
    throw InputError("from_factors: non-finite entries");
  }
  if (U.rows() != X.rows() || U.cols() != X.rows() || V.rows() != X.cols() ||
      V.cols() != X.cols()) {
    throw InputError("from_factors: factor dimensions do not match X");
  }
  SvdPoint p;
  p.transposed_ = X.rows() < X.cols();
  p.x_ = p.transposed_ ? Matrix(X.transpose()) : X;
  p.u_ = p.transposed_ ? V : U;
  p.v_ = p.transposed_ ? U : V;
  p.tol_ = tol;

  const Index m = p.x_.rows();
  const Index n = p.x_.cols();
  const double orth_tol = 1e-10;
  if ((p.u_.transpose() * p.u_ - Matrix::Identity(m, m)).norm() > orth_tol * m ||
      (p.v_.transpose() * p.v_ - Matrix::Identity(n, n)).norm() > orth_tol * n) {
    throw InputError("from_factors: U or V is not orthogonal");
  }
  const Matrix core = p.u_.transpose() * p.x_ * p.v_;
  p.sigma_ = core.diagonal().head(n);
  Matrix off = core;
  off.diagonal().head(n).setZero();
  if (off.norm() > 1e-10 * (1.0 + X.norm())) {
    throw InputError("from_factors: U^T X V is not diagonal");
  }
  for (Index i = 0; i < n; ++i) {
    if (p.sigma_[i] < -1e-12 * (1.0 + X.norm()) ||
        (i > 0 && p.sigma_[i] > p.sigma_[i - 1] + 1e-12 * (1.0 + X.norm()))) {
      throw InputError("from_factors: singular values must be nonnegative and nonincreasing");
    }
  }
  p.sigma_ = p.sigma_.cwiseMax(0.0);
  p.s_ = numerical_rank(p.sigma_, tol.rank_tol, -1.0, tol.abs_floor);
  return p;
}

std::vector<Index> SvdPoint::gamma() const {
  std::vector<Index> g(static_cast<std::size_t>(s_));
  for (Index i = 0; i < s_; ++i) g[static_cast<std::size_t>(i)] = i;
  return g;
}

bool SvdPoint::matches(const Matrix& M) const {
  if (transposed_) return M.rows() == x_.cols() && M.cols() == x_.rows();
  return M.rows() == x_.rows() && M.cols() == x_.cols();
}

double SvdPoint::sigma_at(Index k) const {
  if (k < 1 || k > sigma_.size()) return 0.0;
  return sigma_[k - 1];
}

RankProjection project_rank(const Matrix& X, Index r, double gap_tol) {
  const Index n = std::min(X.rows(), X.cols());
  if (r < 1 || r > n) {
    throw InputError("project_rank: rank bound " + std::to_string(r) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  const SvdPoint p = svd_point(X);
  const Vector& sig = p.sigma();
  RankProjection out;
  Matrix core = Matrix::Zero(p.rows(), p.cols());
  for (Index i = 0; i < r; ++i) core(i, i) = sig[i];
  out.point = p.to_caller(p.u() * core * p.v().transpose());
  if (r < n) {
    const double s1 = sig[0];
    const bool nonzero = sig[r - 1] > p.tolerances().rank_tol *
                                          std::max(s1, p.tolerances().abs_floor);
    out.ambiguous = nonzero && (sig[r - 1] - sig[r] <= gap_tol * s1);
  }
  return out;
}

Matrix project_hankel(const Matrix& X) {
  const Index m = X.rows();
  const Index n = X.cols();
  if (m == 0 || n == 0) return X;
  Vector sums = Vector::Zero(m + n - 1);
  Vector counts = Vector::Zero(m + n - 1);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      sums[i + j] += X(i, j);
      counts[i + j] += 1.0;
    }
  }
  return hankel_from_signal(sums.cwiseQuotient(counts), m);
}

Matrix hankel_from_signal(const Vector& signal, Index rows) {
  if (rows < 1 || signal.size() < rows) {
    throw InputError("hankel_from_signal: signal shorter than the row count");
  }
  const Index cols = signal.size() - rows + 1;
  Matrix H(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) H(i, j) = signal[i + j];
  }
  return H;
}

}  // namespace rankcertify
