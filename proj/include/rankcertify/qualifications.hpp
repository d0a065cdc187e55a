#pragma once

#include <utility>
#include <vector>

#include "rankcertify/affine.hpp"
#include "rankcertify/execution.hpp"
#include "rankcertify/matcore.hpp"

namespace rankcertify {

/// Linear-independence constraint qualifications at a feasible point.
struct QualificationReport {
  bool assumption1 = false;  // T^i_X linearly independent
  bool assumption2 = false;  // R^i_X linearly independent
  bool dim_ok_1 = false;     // l <= mn - (m-s)(n-s)
  bool dim_ok_2 = false;     // l <= s^2
  Verdict normal_in_tangent = Verdict::not_applicable;
  double sigma_min_T = kInfinity;  // smallest singular value of the stacked T^i
  double sigma_min_R = kInfinity;  // same for R^i

  bool operator==(const QualificationReport&) const = default;
};

struct ProjectedConstraints {
  std::vector<Matrix> T;
  std::vector<Matrix> R;
};

/// T^i = U^T A^i V with the (Γm⊥, Γn⊥) block zeroed; R^i keeps only the
/// (Γ, Γ) block. Both are returned in the SVD basis, caller orientation.
ProjectedConstraints build_TR(const SvdPoint& P, const AffineSet& S);

struct IndependenceCheck {
  bool independent = true;
  double sigma_min = kInfinity;  // +inf for an empty list
};

/// Stacks vec(M_i) as rows and compares the numerical rank (threshold
/// 1e-10 * sigma_max) with the number of matrices.
IndependenceCheck check_assumption(const std::vector<Matrix>& mats);

/// (l <= mn - (m-s)(n-s), l <= s^2).
std::pair<bool, bool> check_dimension_conditions(const SvdPoint& P, const AffineSet& S);

/// Finite basis of the Fréchet normal cone of R_X(r) for s < r: the
/// off-diagonal units u_i v_j^T (i != j in Γn⊥) when s = r - 1, plus the
/// units u_k v_j^T with k beyond the first n rows. Caller orientation.
std::vector<Matrix> frechet_RXr_basis(const SvdPoint& P, Index r);

/// Whether N^F_{R_X(r)}(X) ⊆ T_L(X). not_applicable when s = r.
Verdict check_normal_in_tangent(const SvdPoint& P, const AffineSet& S, Index r,
                                double tol = 1e-8, ExecPolicy policy = kDefaultPolicy);

/// All of the above in one report.
QualificationReport qualify(const SvdPoint& P, const AffineSet& S, Index r,
                            ExecPolicy policy = kDefaultPolicy);

}  // namespace rankcertify
