#pragma once

#include <vector>

#include "rankcertify/types.hpp"

namespace rankcertify {

struct RankTolerances {
  double rank_tol = 1e-10;
  double abs_floor = 1e-14;
};

inline constexpr double kDefaultGapTol = 1e-8;

/// A matrix together with its full SVD, held in the working orientation
/// (rows >= cols). When the caller's matrix is wide it is transposed on entry
/// and `transposed()` is set; `to_working` / `to_caller` move other matrices
/// between the two orientations.
///
/// The singular vectors follow a fixed sign convention: in each column of U
/// the entry of largest magnitude is positive (lowest row wins ties), and the
/// paired column of V is flipped with it.
class SvdPoint {
 public:
  SvdPoint() = default;

  /// Validates and stores externally supplied factors (caller orientation):
  /// X = U * diag(sigma) * V^T with orthogonal U (m x m) and V (n x n). Used
  /// when a specific completion of U and V is required.
  static SvdPoint from_factors(const Matrix& X, const Matrix& U, const Matrix& V,
                               RankTolerances tol = {});

  const Matrix& x() const { return x_; }  // working orientation
  const Matrix& u() const { return u_; }
  const Matrix& v() const { return v_; }
  const Vector& sigma() const { return sigma_; }
  Index rank() const { return s_; }
  Index rows() const { return x_.rows(); }
  Index cols() const { return x_.cols(); }
  bool transposed() const { return transposed_; }
  RankTolerances tolerances() const { return tol_; }

  /// Support Γ = {0, ..., s-1} (0-based; singular values are sorted).
  std::vector<Index> gamma() const;

  /// Caller-orientation copy of X.
  Matrix caller_x() const { return to_caller(x_); }
  /// Left / right singular vectors as seen by the caller.
  const Matrix& caller_u() const { return transposed_ ? v_ : u_; }
  const Matrix& caller_v() const { return transposed_ ? u_ : v_; }

  Matrix to_working(const Matrix& M) const { return transposed_ ? Matrix(M.transpose()) : M; }
  Matrix to_caller(const Matrix& M) const { return transposed_ ? Matrix(M.transpose()) : M; }

  /// Dimension check against caller orientation.
  bool matches(const Matrix& M) const;

  /// sigma_k (1-based), zero when k exceeds the number of singular values.
  double sigma_at(Index k) const;

 private:
  friend SvdPoint svd_point(const Matrix& X, RankTolerances tol);

  Matrix x_, u_, v_;
  Vector sigma_;
  Index s_ = 0;
  bool transposed_ = false;
  RankTolerances tol_{};
};

/// Full SVD with deterministic signs; throws InputError on non-finite input.
SvdPoint svd_point(const Matrix& X, RankTolerances tol = {});

/// Number of entries of `sigma` (sorted, nonnegative) above
/// rank_tol * max(reference, abs_floor). A negative reference means sigma[0].
Index numerical_rank(const Vector& sigma, double rank_tol, double reference = -1.0,
                     double abs_floor = 1e-14);

/// Numerical rank of an arbitrary matrix under the same rule.
Index numerical_rank(const Matrix& M, double rank_tol, double reference = -1.0,
                     double abs_floor = 1e-14);

struct RankProjection {
  Matrix point;
  bool ambiguous = false;
};

/// Truncated-SVD projection onto R(r) = {rank <= r}. `ambiguous` marks a tie
/// sigma_r ~ sigma_{r+1} with sigma_r nonzero, where the projection is
/// set-valued and the SVD-order selection was taken.
RankProjection project_rank(const Matrix& X, Index r, double gap_tol = kDefaultGapTol);

/// Frobenius projection onto Hankel matrices: each anti-diagonal is replaced
/// by its mean.
Matrix project_hankel(const Matrix& X);

/// Hankel matrix with X(i, j) = signal[i + j]; signal length must be rows+cols-1.
Matrix hankel_from_signal(const Vector& signal, Index rows);

bool all_finite(const Matrix& M);

}  // namespace rankcertify
