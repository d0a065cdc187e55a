#pragma once

#include <vector>

#include "rankcertify/types.hpp"

namespace rankcertify {

inline constexpr double kDefaultFeasTol = 1e-8;

/// L = {X : <A^i, X> = b_i, i = 1..l}.
///
/// The Gram matrix G_ij = <A^i, A^j> is eigendecomposed once at construction;
/// directions with eigenvalue below 1e-10 * ||G||_2 are treated as redundant
/// and dropped from least-squares solves. The object is immutable afterwards.
class AffineSet {
 public:
  AffineSet() = default;
  /// Empty constraint list over m x n matrices.
  AffineSet(Index rows, Index cols);
  /// Throws InputError on mismatched sizes, differing shapes, non-finite or
  /// zero constraint matrices.
  AffineSet(Index rows, Index cols, std::vector<Matrix> mats, Vector rhs);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index size() const { return static_cast<Index>(mats_.size()); }
  const std::vector<Matrix>& mats() const { return mats_; }
  const Vector& rhs() const { return rhs_; }
  const Matrix& gram() const { return gram_; }

  /// True when the constraint matrices are linearly dependent.
  bool redundant() const { return gram_rank_ < size(); }
  Index gram_rank() const { return gram_rank_; }

  /// y = G^+ v over the retained eigen-directions (minimum-norm solution).
  Vector gram_solve(const Vector& v) const;

  /// Orthonormal basis of span{A^i}, one matrix per independent direction.
  const std::vector<Matrix>& normal_basis() const { return normal_basis_; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Matrix> mats_;
  Vector rhs_;
  Matrix gram_;
  Matrix gram_vectors_;  // retained eigenvectors (columns)
  Vector gram_values_;   // retained eigenvalues
  Index gram_rank_ = 0;
  std::vector<Matrix> normal_basis_;
};

/// (<A^1,X>, ..., <A^l,X>).
Vector apply(const AffineSet& S, const Matrix& X);

/// sum_i y_i A^i.
Matrix adjoint(const AffineSet& S, const Vector& y);

/// ||apply(S, X) - b||_2.
double feasibility_residual(const AffineSet& S, const Matrix& X);

bool is_feasible(const AffineSet& S, const Matrix& X, double feas_tol = kDefaultFeasTol);

struct AffineProjection {
  Matrix point;
  bool redundant = false;  // Gram matrix was rank-deficient
  double residual = 0.0;   // feasibility residual of `point`
};

/// Frobenius-nearest point of L. Throws InfeasibleSetError when the
/// constraints are inconsistent.
AffineProjection project_affine(const AffineSet& S, const Matrix& X);

/// Orthonormal basis of N_L(X) = span{A^i}.
const std::vector<Matrix>& normal_space_L(const AffineSet& S);

/// Component of M in span{A^i}.
Matrix normal_part_L(const AffineSet& S, const Matrix& M);

/// Xi in T_L(X) = {Xi : apply(S, Xi) = 0}, tested through the size of the
/// normal component: ||P_N(Xi)||_F <= tol * (1 + ||Xi||_F).
bool in_tangent_L(const AffineSet& S, const Matrix& Xi, double tol = 1e-8);

}  // namespace rankcertify
