#pragma once

#include <cstddef>
#include <vector>

#include "rankcertify/affine.hpp"
#include "rankcertify/execution.hpp"
#include "rankcertify/matcore.hpp"

namespace rankcertify {

// Membership tests for the tangent and normal objects of the rank-constrained
// set at a point P. Every test accepts matrices in the caller's orientation and
// uses a scale-relative tolerance (default 1e-8). Index sets are 0-based and
// refer to columns of the working-orientation factors held by P; answers that
// depend on U and V beyond the support are relative to that completion.

inline constexpr double kConeTol = 1e-8;

using IndexSet = std::vector<Index>;

/// The family of r-element index sets J with Γ ⊆ J ⊆ {0..n-1}, in
/// lexicographic order, possibly capped.
struct IndexFamily {
  IndexSet gamma;
  Index r = 0;
  std::vector<IndexSet> sets;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultFamilyCap = 10000;

enum class NormalConeCase { rank_full, rank_deficit_one, rank_deficit_two_plus };

/// Blocks of W in the SVD basis used by the three-case Fréchet normal cone of
/// R_X(r). D is U_{Γn⊥}^T W V_{Γn⊥}; H is U_{[m-n]}^T W V and is empty (0 rows)
/// when the working matrix is square.
struct NormalConeElementDecomposition {
  Matrix D;
  Matrix H;
  NormalConeCase which = NormalConeCase::rank_full;
};

/// T_{R_s}(X): U_{Γm⊥}^T Xi V_{Γn⊥} = 0.
bool in_tangent_fixed_rank(const SvdPoint& P, const Matrix& Xi, double tol = kConeTol);

/// N_{R_s}(X): U_Γ^T W = 0 and W V_Γ = 0.
bool in_normal_fixed_rank(const SvdPoint& P, const Matrix& W, double tol = kConeTol);

/// Bouligand tangent cone of R(r): the normal block of Xi has rank <= r - s.
bool in_bouligand_rank_set(const SvdPoint& P, Index r, const Matrix& Xi,
                           double tol = kConeTol);

/// Fréchet normal cone of R(r): N_{R_s}(X) when s = r, {0} when s < r.
bool in_frechet_rank_set(const SvdPoint& P, Index r, const Matrix& W, double tol = kConeTol);

/// Mordukhovich normal cone of R(r): W in N_{R_s}(X) with rank(W) <= n - r.
bool in_mordukhovich_rank_set(const SvdPoint& P, Index r, const Matrix& W,
                              double tol = kConeTol);

/// Throws InvalidPointError when s > r.
IndexFamily enumerate_J(const SvdPoint& P, Index r, std::size_t cap = kDefaultFamilyCap);

/// N_{R_X(J)}(X): U_J^T W V_J = 0.
bool in_normal_RXJ(const SvdPoint& P, const IndexSet& J, const Matrix& W,
                   double tol = kConeTol);

struct FrechetRXrResult {
  bool member = false;
  NormalConeElementDecomposition decomposition;
};

/// Fréchet normal cone of R_X(r) by its closed three-case form.
FrechetRXrResult in_frechet_RXr(const SvdPoint& P, Index r, const Matrix& W,
                                double tol = kConeTol);

/// The same cone as the intersection over J of N_{R_X(J)}(X), checked set by
/// set. Independent route used to cross-check the closed form.
bool in_frechet_RXr_by_enumeration(const SvdPoint& P, Index r, const Matrix& W,
                                   double tol = kConeTol, ExecPolicy policy = kDefaultPolicy);

struct FeasibleNormalResult {
  bool member = false;
  /// False when the constraint qualification behind the intersection rule was
  /// not verified: a true answer is still valid (inner approximation), a false
  /// one is inconclusive.
  bool qualified = false;
  Vector y;
  Matrix w2;
  double residual = 0.0;
};

/// Fréchet normal cone of L ∩ R(r) through the intersection rule: split
/// W = sum_i y_i A^i + W2 by least squares and test W2 against N^F_{R(r)}(X).
/// `qualified` is supplied by the caller (see qualifications.hpp).
FeasibleNormalResult in_frechet_normal_feasible(const SvdPoint& P, const AffineSet& S, Index r,
                                                const Matrix& W, bool qualified,
                                                double tol = kConeTol);

/// Orthogonal projection of M (caller orientation) onto N_{R_s}(X).
Matrix project_normal_fixed_rank(const SvdPoint& P, const Matrix& M);

}  // namespace rankcertify
