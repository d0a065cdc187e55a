#include "rankcertify/affine.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rankcertify/errors.hpp"

namespace rankcertify {

AffineSet::AffineSet(Index rows, Index cols) : AffineSet(rows, cols, {}, Vector(0)) {}

AffineSet::AffineSet(Index rows, Index cols, std::vector<Matrix> mats, Vector rhs)
    : rows_(rows), cols_(cols), mats_(std::move(mats)), rhs_(std::move(rhs)) {
  if (rows < 1 || cols < 1) throw InputError("AffineSet: dimensions must be positive");
  if (static_cast<Index>(mats_.size()) != rhs_.size()) {
    throw InputError("AffineSet: " + std::to_string(mats_.size()) + " matrices but " +
                     std::to_string(rhs_.size()) + " right-hand sides");
  }
  if (!rhs_.allFinite()) throw InputError("AffineSet: non-finite right-hand side");
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    const Matrix& A = mats_[i];
    if (A.rows() != rows || A.cols() != cols) {
      throw InputError("AffineSet: constraint " + std::to_string(i) + " has shape " +
                       std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    }
    if (!A.allFinite()) throw InputError("AffineSet: non-finite constraint matrix");
    if (A.squaredNorm() == 0.0) {
      throw InputError("AffineSet: constraint " + std::to_string(i) + " is the zero matrix");
    }
  }

  const Index l = size();
  gram_ = Matrix(l, l);
  for (Index i = 0; i < l; ++i) {
    for (Index j = i; j < l; ++j) {
      gram_(i, j) = gram_(j, i) = mats_[i].cwiseProduct(mats_[j]).sum();
    }
  }
  if (l == 0) return;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram_);
  const Vector& lambda = eig.eigenvalues();
  const double threshold = 1e-10 * lambda.cwiseAbs().maxCoeff();
  std::vector<Index> keep;
  for (Index k = 0; k < l; ++k) {
    if (lambda[k] > threshold) keep.push_back(k);
  }
  gram_rank_ = static_cast<Index>(keep.size());
  gram_vectors_ = Matrix(l, gram_rank_);
  gram_values_ = Vector(gram_rank_);
  for (Index c = 0; c < gram_rank_; ++c) {
    gram_vectors_.col(c) = eig.eigenvectors().col(keep[c]);
    gram_values_[c] = lambda[keep[c]];
  }
  // Q = sum_i q_i A^i / sqrt(lambda) is orthonormal for each retained (q, lambda).
  for (Index c = 0; c < gram_rank_; ++c) {
    Matrix B = Matrix::Zero(rows, cols);
    for (Index i = 0; i < l; ++i) B += gram_vectors_(i, c) * mats_[i];
    normal_basis_.push_back(B / std::sqrt(gram_values_[c]));
  }
}

Vector AffineSet::gram_solve(const Vector& v) const {
  if (v.size() != size()) throw InputError("gram_solve: length mismatch");
  if (gram_rank_ == 0) return Vector::Zero(size());
  const Vector coeffs = (gram_vectors_.transpose() * v).cwiseQuotient(gram_values_);
  return gram_vectors_ * coeffs;
}

Vector apply(const AffineSet& S, const Matrix& X) {
  if (X.rows() != S.rows() || X.cols() != S.cols()) {
    throw InputError("apply: matrix is " + std::to_string(X.rows()) + "x" +
                     std::to_string(X.cols()) + ", constraints are " +
                     std::to_string(S.rows()) + "x" + std::to_string(S.cols()));
  }
  Vector out(S.size());
  for (Index i = 0; i < S.size(); ++i) out[i] = S.mats()[i].cwiseProduct(X).sum();
  return out;
}

Matrix adjoint(const AffineSet& S, const Vector& y) {
  if (y.size() != S.size()) {
    throw InputError("adjoint: expected " + std::to_string(S.size()) + " multipliers, got " +
                     std::to_string(y.size()));
  }
  Matrix out = Matrix::Zero(S.rows(), S.cols());
  for (Index i = 0; i < S.size(); ++i) out += y[i] * S.mats()[i];
  return out;
}

double feasibility_residual(const AffineSet& S, const Matrix& X) {
  return (apply(S, X) - S.rhs()).norm();
}

bool is_feasible(const AffineSet& S, const Matrix& X, double feas_tol) {
  return feasibility_residual(S, X) <= feas_tol * (1.0 + S.rhs().norm());
}

AffineProjection project_affine(const AffineSet& S, const Matrix& X) {
  AffineProjection out;
  out.redundant = S.redundant();
  if (S.size() == 0) {
    out.point = X;
    return out;
  }
  const Vector excess = apply(S, X) - S.rhs();
  out.point = X - adjoint(S, S.gram_solve(excess));
  out.residual = feasibility_residual(S, out.point);
  if (out.residual > 1e-9 * (1.0 + S.rhs().norm())) {
    throw InfeasibleSetError("project_affine: constraints are inconsistent (residual " +
                             std::to_string(out.residual) + ")");
  }
  return out;
}

const std::vector<Matrix>& normal_space_L(const AffineSet& S) { return S.normal_basis(); }

Matrix normal_part_L(const AffineSet& S, const Matrix& M) {
  Matrix out = Matrix::Zero(M.rows(), M.cols());
  for (const Matrix& B : S.normal_basis()) out += B.cwiseProduct(M).sum() * B;
  return out;
}

bool in_tangent_L(const AffineSet& S, const Matrix& Xi, double tol) {
  if (Xi.rows() != S.rows() || Xi.cols() != S.cols()) {
    throw InputError("in_tangent_L: dimension mismatch");
  }
  return normal_part_L(S, Xi).norm() <= tol * (1.0 + Xi.norm());
}

}  // namespace rankcertify
