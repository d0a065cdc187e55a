#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankcertify/affine.hpp"
#include "rankcertify/types.hpp"

namespace rankcertify {

/// Smooth objective f with optional second-order information. Callbacks must
/// be re-entrant: second-order checks call them from several threads.
struct Objective {
  std::function<double(const Matrix&)> value;
  std::function<Matrix(const Matrix&)> gradient;
  /// [∇²f(X)](Xi, Xi).
  std::function<double(const Matrix&, const Matrix&)> hessian_quadform;
  /// [∇²f(X)](Xi1, Xi2); when absent it is derived from the quadratic form by
  /// polarization.
  std::function<double(const Matrix&, const Matrix&, const Matrix&)> hessian_bilinear;
  bool convex = false;

  bool has_hessian() const { return static_cast<bool>(hessian_quadform) || static_cast<bool>(hessian_bilinear); }
  double quadform(const Matrix& X, const Matrix& Xi) const;
  double bilinear(const Matrix& X, const Matrix& A, const Matrix& B) const;
};

/// Restricts the ambient space of candidate points and second-order
/// directions. `diagonal` is the sparse-vector embedding into Diag(R^n).
enum class Structure { general, diagonal };

struct Problem {
  Objective objective;
  AffineSet constraints;
  Index rank = 1;
  std::string name;
  Structure structure = Structure::general;

  Index rows() const { return constraints.rows(); }
  Index cols() const { return constraints.cols(); }
};

/// f(X) = ½‖H - X‖²_F.
Objective frobenius_distance_objective(const Matrix& H);

/// f(X) = ½ vec(X)^T Q vec(X) + <C, X> with vec in column-major order.
/// Q is symmetrized; convex iff its smallest eigenvalue is >= -1e-12·‖Q‖.
Objective quadratic_objective(const Matrix& Q, const Matrix& C);

/// Hankel constraints E_{kj} - E_{k-1,j+1}, k = 2..m (outer), j = 1..n-1 (inner).
AffineSet hankel_constraints(Index rows, Index cols);

/// Nearest rank-≤r Hankel matrix to H. Requires 1 <= r < min(m, n).
Problem hankel_problem(const Matrix& H, Index r);

/// Row-stochastic low-rank representation: ½ sum_i w_i B^i w_i^T subject to
/// each row of W summing to one. Uses the symmetric part of each B^i. Requires
/// 1 < r < N.
Problem lrr_problem(const std::vector<Matrix>& B, Index r);

/// Objective on vectors for the diagonal embedding.
struct VectorObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<double(const Vector&, const Vector&)> hessian_quadform;
  bool convex = false;
};

/// g(x) = ½ x^T Q x + c^T x.
VectorObjective vector_quadratic(const Matrix& Q, const Vector& c);

/// Sparse-vector problem min g(x) s.t. <a^i, x> = b_i, ‖x‖_0 <= r embedded as
/// f(Diag(x)) = g(x) over diagonal matrices with A^i = Diag(a^i).
Problem diagonal_problem(const std::vector<Vector>& a, const Vector& b, Index r,
                         const VectorObjective& g);

/// Throws InputError when X violates the problem's structure.
void check_structure(const Problem& prob, const Matrix& X);

}  // namespace rankcertify
