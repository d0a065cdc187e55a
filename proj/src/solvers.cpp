#include "rankcertify/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "rankcertify/errors.hpp"

namespace rankcertify {

namespace {

const double kHalfPrecision = std::sqrt(std::numeric_limits<double>::epsilon());

double finite_or_abort(double v, const char* what) {
  if (!std::isfinite(v)) throw SolverAbort(std::string(what) + " is not finite");
  return v;
}

// Rank projection that keeps the diagonal structure exact.
RankProjection project_structured(const Problem& prob, const Matrix& X) {
  if (prob.structure != Structure::diagonal) return project_rank(X, prob.rank);
  const Vector d = X.diagonal();
  std::vector<Index> order(static_cast<std::size_t>(d.size()));
  for (Index i = 0; i < d.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return std::abs(d[a]) > std::abs(d[b]); });
  RankProjection out;
  out.point = Matrix::Zero(X.rows(), X.cols());
  const auto r = static_cast<std::size_t>(prob.rank);
  for (std::size_t k = 0; k < r && k < order.size(); ++k) out.point(order[k], order[k]) = d[order[k]];
  if (r < order.size()) {
    const double kept = std::abs(d[order[r - 1]]);
    const double next = std::abs(d[order[r]]);
    out.ambiguous = kept > 0.0 && kept - next <= kDefaultGapTol * std::abs(d[order[0]]);
  }
  return out;
}

Matrix project_affine_structured(const Problem& prob, const Matrix& X) {
  Matrix Y = project_affine(prob.constraints, X).point;
  if (prob.structure == Structure::diagonal) {
    const Vector d = Y.diagonal();
    Y = d.asDiagonal().toDenseMatrix();
  }
  return Y;
}

}  // namespace

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::tol_met:
      return "tol_met";
    case StopReason::max_iter:
      return "max_iter";
    case StopReason::stalled:
      return "stalled";
  }
  return "max_iter";
}

void write_trace_csv(std::ostream& os, const SolveTrace& trace) {
  const auto old_precision = os.precision(17);
  os << "iter,objective,feas_residual,step\n";
  for (const TraceEntry& e : trace.iterates) {
    os << e.iter << ',' << e.objective << ',' << e.feas_residual << ',' << e.step << '\n';
  }
  os.precision(old_precision);
}

APResult alternating_projections(const Matrix& H, Index r, int max_iter, double tol) {
  const Index n = std::min(H.rows(), H.cols());
  if (r < 1 || r >= n) throw InputError("alternating_projections: rank bound must satisfy 1 <= r < min(m, n)");
  if (!H.allFinite()) throw InputError("alternating_projections: non-finite data");
  if (max_iter < 1 || !(tol > 0.0)) throw InputError("alternating_projections: bad iteration parameters");

  const AffineSet hankel = hankel_constraints(H.rows(), H.cols());
  const double bound = tol * (1.0 + H.norm());
  APResult out;
  Matrix X = project_hankel(H);
  for (int k = 1; k <= max_iter; ++k) {
    const RankProjection pr = project_rank(X, r);
    if (pr.ambiguous) ++out.trace.ambiguity_events;
    Matrix next = project_hankel(pr.point);
    const double step = (next - X).norm();
    X = std::move(next);
    TraceEntry e;
    e.iter = k;
    e.objective = finite_or_abort(0.5 * (H - X).squaredNorm(), "objective");
    e.feas_residual = feasibility_residual(hankel, X);
    e.step = step;
    e.merit = e.objective;
    out.trace.iterates.push_back(e);
    if (step <= bound) {
      out.trace.converged = true;
      out.trace.stop_reason = StopReason::tol_met;
      break;
    }
  }
  out.X = std::move(X);
  return out;
}

ALMResult alm_projected_gradient(const Problem& prob, const Matrix& X0, const ALMParams& p,
                                 const CertifyOptions& certify) {
  if (!(p.rho > 0.0) || !(p.rho_growth >= 1.0) || !(p.alpha0 > 0.0) || p.max_outer < 1 ||
      p.max_inner < 1 || !(p.tol > 0.0) || !(p.step_floor > 0.0)) {
    throw InputError("alm_projected_gradient: parameters must be positive");
  }
  if (X0.rows() != prob.rows() || X0.cols() != prob.cols()) {
    throw InputError("alm_projected_gradient: starting point has the wrong shape");
  }
  if (!X0.allFinite()) throw InputError("alm_projected_gradient: non-finite starting point");

  const AffineSet& S = prob.constraints;
  const Objective& f = prob.objective;
  const double b_scale = 1.0 + S.rhs().norm();

  ALMResult out;
  Matrix X = project_structured(prob, project_affine_structured(prob, X0)).point;
  Vector y = Vector::Zero(S.size());
  double rho = p.rho;
  double prev_feas = kInfinity;
  double alpha = p.alpha0;
  int iter = 0;
  bool stalled = false;

  auto merit = [&](const Matrix& M, Vector& excess) {
    excess = apply(S, M) - S.rhs();
    return finite_or_abort(f.value(M), "objective") + y.dot(excess) + 0.5 * rho * excess.squaredNorm();
  };

  for (int outer = 0; outer < p.max_outer; ++outer) {
    Vector excess;
    double L = merit(X, excess);
    double inner_measure = kInfinity;
    // Inexact inner solves early on, tightening to tol.
    const double inner_tol = std::max(p.tol, std::pow(0.1, outer + 1));
    stalled = false;
    for (int inner = 0; inner < p.max_inner; ++inner) {
      const Matrix gf = f.gradient(X);
      const Matrix G = gf + adjoint(S, y + rho * excess);
      if (!G.allFinite()) throw SolverAbort("gradient is not finite");
      const double tol_s = p.tol * (1.0 + gf.norm());

      double step = std::min(2.0 * alpha, p.alpha0);
      Matrix Xn;
      Vector excess_n;
      double Ln = 0.0;
      bool accepted = false;
      while (step >= p.step_floor) {
        const RankProjection pr = project_structured(prob, X - step * G);
        Xn = pr.point;
        Ln = merit(Xn, excess_n);
        // The merit change is formed term by term so that it survives
        // cancellation: the constraint part from the linear map of the step,
        // the objective part by the trapezoid rule once the values agree to
        // half precision (exact for quadratics, O(|D|^3) otherwise).
        const Matrix D = Xn - X;
        const Vector dexcess = apply(S, D);
        const double fn = f.value(Xn);
        const double fx = f.value(X);
        const double fdiff = std::abs(fn - fx) <= kHalfPrecision * (1.0 + std::abs(fx))
                                 ? 0.5 * (gf + f.gradient(Xn)).cwiseProduct(D).sum()
                                 : fn - fx;
        const double change = fdiff + (y + 0.5 * rho * (excess + excess_n)).dot(dexcess);
        const double moved = D.norm();
        if (moved <= tol_s * step || change <= -p.armijo / step * moved * moved) {
          if (pr.ambiguous) ++out.trace.ambiguity_events;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        stalled = true;
        break;
      }
      alpha = step;
      inner_measure = (Xn - X).norm() / step;
      X = std::move(Xn);
      excess = std::move(excess_n);
      L = Ln;

      TraceEntry e;
      e.iter = ++iter;
      e.objective = f.value(X);
      e.feas_residual = excess.norm();
      e.step = step;
      e.outer = outer;
      e.merit = L;
      out.trace.iterates.push_back(e);
      if (inner_measure <= inner_tol / p.tol * tol_s) break;
    }

    y += rho * excess;
    const double feas = excess.norm();
    if (inner_measure <= p.tol * (1.0 + f.gradient(X).norm()) && feas <= p.tol * b_scale) {
      out.trace.converged = true;
      out.trace.stop_reason = StopReason::tol_met;
      break;
    }
    if (stalled && feas <= p.tol * b_scale) break;
    // Grow the penalty only when feasibility stalls, which keeps the inner
    // problems well conditioned.
    if (feas > 0.25 * prev_feas) rho = std::min(rho * p.rho_growth, p.rho_max);
    prev_feas = feas;
  }
  if (!out.trace.converged) out.trace.stop_reason = stalled ? StopReason::stalled : StopReason::max_iter;

  out.X = X;
  out.y = y;
  out.alpha = alpha;
  const double beta = beta_threshold(svd_point(X), prob.rank,
                                     f.gradient(X) + adjoint(S, y), 0.0);
  if (std::isfinite(beta) && beta > 0.0) out.alpha = std::min(alpha, p.beta_safeguard * beta);
  out.trace.certificate = classify(prob, X, std::nullopt, certify);
  return out;
}

}  // namespace rankcertify
