#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankcertify/problems.hpp"
#include "rankcertify/stationarity.hpp"

namespace rankcertify {

enum class StopReason { tol_met, max_iter, stalled };

std::string_view to_string(StopReason r);

struct TraceEntry {
  int iter = 0;
  double objective = 0.0;
  double feas_residual = 0.0;
  double step = 0.0;
  int outer = 0;        // outer (multiplier) iteration; 0 for alternating projections
  double merit = 0.0;   // augmented Lagrangian value; the objective for alternating projections
};

struct SolveTrace {
  std::vector<TraceEntry> iterates;
  bool converged = false;
  StopReason stop_reason = StopReason::max_iter;
  int ambiguity_events = 0;   // projection ties met during the iteration
  std::optional<Certificate> certificate;
};

/// Writes "iter,objective,feas_residual,step" followed by one row per entry.
void write_trace_csv(std::ostream& os, const SolveTrace& trace);

struct APResult {
  Matrix X;
  SolveTrace trace;
};

/// Alternating projections between the Hankel subspace and R(r), starting
/// from the Hankel projection of H. Stops when ||X_{k+1} - X_k||_F <=
/// tol * (1 + ||H||_F). The output is Hankel by construction. Logged
/// objective is ½‖H - X‖²_F.
APResult alternating_projections(const Matrix& H, Index r, int max_iter = 5000,
                                 double tol = 1e-12);

struct ALMParams {
  double rho = 1.0;
  double rho_growth = 2.0;
  double rho_max = 1e8;
  double alpha0 = 1.0;
  double beta_safeguard = 0.99;
  double armijo = 1e-4;
  double step_floor = 1e-12;
  int max_outer = 60;
  int max_inner = 500;
  double tol = 1e-12;
};

struct ALMResult {
  Matrix X;
  Vector y;
  double alpha = 1.0;  // certification step, below beta when beta > 0
  SolveTrace trace;
};

/// Augmented-Lagrangian projected gradient. Inner iteration
/// X <- Π_{R(r)}(X - alpha ∇_X L_rho(X, y)) with Armijo backtracking on L_rho;
/// outer update y <- y + rho (A(X) - b), rho <- min(rho * growth, rho_max).
/// The reported alpha is the last accepted step capped at safeguard * beta
/// (beta at the final point) when beta is finite and positive.
/// The final point is classified and the certificate attached to the trace.
/// Throws SolverAbort on non-finite objective values.
ALMResult alm_projected_gradient(const Problem& prob, const Matrix& X0, const ALMParams& params = {},
                                 const CertifyOptions& certify = {});

}  // namespace rankcertify
