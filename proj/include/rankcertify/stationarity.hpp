#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankcertify/cones.hpp"
#include "rankcertify/execution.hpp"
#include "rankcertify/matcore.hpp"
#include "rankcertify/problems.hpp"
#include "rankcertify/qualifications.hpp"

namespace rankcertify {

/// Scope of the optimality conclusion licensed for a convex objective.
enum class GlobalScope { none, restricted_to_RXGamma, global };

std::string_view to_string(GlobalScope g);
GlobalScope global_scope_from_string(std::string_view s);

struct CertifyOptions {
  double tol = 1e-8;         // stationarity, scaled by (1 + ||grad f||_F)
  double feas_tol = kDefaultFeasTol;
  double rank_tol = 1e-10;
  double cone_tol = kConeTol;
  double psd_tol = 1e-8;     // second-order necessary: lambda_min >= -psd_tol * (1 + ||Q||)
  double pd_tol = 1e-10;     // second-order sufficient: values must exceed this
  double boundary_slack = 1e-10;  // relative slack on ||grad L||_2 <= sigma_r / alpha
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t family_cap = kDefaultFamilyCap;
  ExecPolicy policy = kDefaultPolicy;
};

struct Certificate {
  bool feasible = false;
  double feasibility_residual = 0.0;
  Index rank_s = 0;
  Vector multipliers;
  bool multipliers_unique = true;
  double stationary_residual = 0.0;
  bool f_stationary = false;
  double alpha = 1.0;
  double beta = kInfinity;
  bool alpha_stationary = false;
  Verdict sonc = Verdict::not_applicable;
  double sonc_min_eigenvalue = kInfinity;
  Verdict sosc = Verdict::not_applicable;
  double sosc_min_value = kInfinity;
  bool second_order_partial = false;  // index-set family was truncated
  bool sosc_sampled = false;          // sufficient verdict rests on sampling
  GlobalScope global_min_scope = GlobalScope::none;
  QualificationReport qualification;
  std::vector<std::string> notes;

  bool operator==(const Certificate& o) const;
};

/// ∇f(X) + sum_i y_i A^i.
Matrix lagrangian_grad(const Problem& prob, const Matrix& X, const Vector& y);

struct MultiplierEstimate {
  Vector y;
  double residual = 0.0;
  bool unique = true;
};

/// Best multipliers for -∇_X L(X, y) ∈ N^F_{R(r)}(X). For s < r this is the
/// least-squares fit of -∇f by span{A^i}; for s = r it minimizes
/// ||U_Γ^T G||² + ||G V_Γ||² with G = ∇_X L. Minimum-norm y when the system
/// is rank-deficient (unique = false).
MultiplierEstimate estimate_multipliers(const Problem& prob, const SvdPoint& P);

/// The membership residual used above, evaluated for a given y.
double stationarity_residual(const Problem& prob, const SvdPoint& P, const Vector& y);

Certificate certify_F(const Problem& prob, const Matrix& X, const CertifyOptions& opt = {});

/// sigma_r(X) / ||grad_L||_2, +inf when ||grad_L||_2 <= zero_tol.
double beta_threshold(const SvdPoint& P, Index r, const Matrix& grad_L, double zero_tol);

struct AlphaCheck {
  bool direct = false;       // X ∈ Π_{R(r)}(X - alpha ∇L), via truncated SVD
  bool closed_form = false;  // normal-space + spectral-norm characterization
  bool ambiguous = false;    // projection tie met in the direct route
  bool boundary_hit = false; // ||∇L||_2 within slack of sigma_r / alpha
  bool near_tolerance = false;
  double fixed_point_residual = 0.0;  // ||X - Xp||_F / alpha
};

/// Both routes for alpha-stationarity at (X, y). Throws ConsistencyError if
/// they disagree away from the tolerance boundary.
AlphaCheck check_alpha(const Problem& prob, const SvdPoint& P, const Vector& y, double alpha,
                       const CertifyOptions& opt = {});

Certificate certify_alpha(const Problem& prob, const Matrix& X, const Vector& y, double alpha,
                          const CertifyOptions& opt = {});

struct SubspaceReport {
  IndexSet J;
  Index dimension = 0;
  double min_eigenvalue = kInfinity;
};

struct SecondOrderReport {
  Verdict verdict = Verdict::not_applicable;
  double min_value = kInfinity;
  bool partial = false;
  bool sampled = false;
  bool qualified = true;
  std::size_t samples_used = 0;
  std::vector<SubspaceReport> per_set;
};

/// Hessian of f nonnegative on T_L(X) ∩ R_X(J) for every J in the family.
SecondOrderReport second_order_necessary(const Problem& prob, const Matrix& X, const Vector& y,
                                         const CertifyOptions& opt = {});

/// Hessian of f positive on (T_L(X) ∩ T^B_{R(r)}(X)) \ {0}. Exact when s = r;
/// for s < r the subspace parts are exact and the remaining cone is sampled.
SecondOrderReport second_order_sufficient(const Problem& prob, const Matrix& X, const Vector& y,
                                          const CertifyOptions& opt = {});

/// Full pipeline: feasibility, qualifications, F-stationarity, beta,
/// alpha-stationarity and second-order checks. `alpha` defaults to 0.5*beta
/// when beta is finite and positive, 1.0 otherwise.
Certificate classify(const Problem& prob, const Matrix& X, std::optional<double> alpha = {},
                     const CertifyOptions& opt = {});

/// Orthonormal basis (Frobenius) of the subspace {sum c_k B_k} ∩ {<C_i, .> = 0}
/// for orthonormal B_k.
std::vector<Matrix> constrained_basis(const std::vector<Matrix>& basis,
                                      const std::vector<Matrix>& constraints,
                                      double rank_tol = 1e-10);

/// Smallest eigenvalue of the Hessian form restricted to span(basis); +inf for
/// an empty basis.
double restricted_hessian_min(const Objective& f, const Matrix& X,
                              const std::vector<Matrix>& basis);

}  // namespace rankcertify
