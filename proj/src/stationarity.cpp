#include "rankcertify/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "rankcertify/errors.hpp"

namespace rankcertify {

namespace {

constexpr double kLstsqThreshold = 1e-10;
constexpr double kConsistencyBand = 1e3;

double spectral_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()[0];
}

bool vectors_equal(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

bool same_double(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

Matrix gradient_checked(const Objective& f, const Matrix& X) {
  Matrix g = f.gradient(X);
  if (g.rows() != X.rows() || g.cols() != X.cols()) {
    throw InputError("objective gradient has the wrong shape");
  }
  return g;
}

double stationarity_scale(const CertifyOptions& opt, const Matrix& grad_f) {
  return opt.tol * (1.0 + grad_f.norm());
}

// Rows of the s = r least-squares system: [vec(U_Γ^T M); vec(M V_Γ)].
Vector normal_rows(const SvdPoint& P, const Matrix& Mw) {
  const Index s = P.rank();
  const Matrix left = P.u().leftCols(s).transpose() * Mw;
  const Matrix right = Mw * P.v().leftCols(s);
  Vector out(left.size() + right.size());
  out << left.reshaped(), right.reshaped();
  return out;
}

// Unit matrices u_p v_q^T, caller orientation.
Matrix unit(const SvdPoint& P, Index p, Index q) {
  return P.to_caller(P.u().col(p) * P.v().col(q).transpose());
}

std::vector<Matrix> structural_constraints(const Problem& prob) {
  std::vector<Matrix> out = prob.constraints.mats();
  if (prob.structure == Structure::diagonal) {
    const Index n = prob.cols();
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix E = Matrix::Zero(n, n);
        E(i, j) = 1.0;
        out.push_back(std::move(E));
      }
    }
  }
  return out;
}

// Orthonormal basis of T_{R_s}(X): u_i v_j^T with i < s or j < s.
std::vector<Matrix> tangent_basis(const SvdPoint& P) {
  const Index s = P.rank();
  std::vector<Matrix> out;
  for (Index i = 0; i < P.rows(); ++i) {
    for (Index j = 0; j < P.cols(); ++j) {
      if (i < s || j < s) out.push_back(unit(P, i, j));
    }
  }
  return out;
}

std::vector<Matrix> rxj_basis(const SvdPoint& P, const IndexSet& J) {
  std::vector<Matrix> out;
  out.reserve(J.size() * J.size());
  for (Index p : J) {
    for (Index q : J) out.push_back(unit(P, p, q));
  }
  return out;
}

Certificate infeasible_certificate(const Problem& prob, double alpha, double residual, Index s) {
  Certificate c;
  c.feasible = false;
  c.feasibility_residual = residual;
  c.rank_s = s;
  c.multipliers = Vector::Zero(prob.constraints.size());
  c.alpha = alpha;
  c.notes.push_back("point is infeasible; stationarity checks skipped");
  return c;
}

struct Feasibility {
  bool feasible = false;
  double residual = 0.0;
  SvdPoint point;
};

Feasibility assess(const Problem& prob, const Matrix& X, const CertifyOptions& opt) {
  check_structure(prob, X);
  Feasibility out;
  out.point = svd_point(X, RankTolerances{opt.rank_tol, 1e-14});
  out.residual = feasibility_residual(prob.constraints, X);
  out.feasible = is_feasible(prob.constraints, X, opt.feas_tol) && out.point.rank() <= prob.rank;
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void fill_first_order(const Problem& prob, const SvdPoint& P, const Matrix& grad_f,
                      const CertifyOptions& opt, Certificate& c) {
  const MultiplierEstimate est = estimate_multipliers(prob, P);
  c.multipliers = est.y;
  c.multipliers_unique = est.unique;
  c.stationary_residual = est.residual;
  c.f_stationary = est.residual <= stationarity_scale(opt, grad_f);
  if (!est.unique) c.notes.push_back("multipliers are not unique; minimum-norm choice reported");
  if (c.f_stationary && prob.objective.convex) {
    c.global_min_scope =
        P.rank() < prob.rank ? GlobalScope::global : GlobalScope::restricted_to_RXGamma;
  }
}

}  // namespace

std::string_view to_string(GlobalScope g) {
  switch (g) {
    case GlobalScope::none:
      return "none";
    case GlobalScope::restricted_to_RXGamma:
      return "restricted_to_RXGamma";
    case GlobalScope::global:
      return "global";
  }
  return "none";
}

GlobalScope global_scope_from_string(std::string_view s) {
  if (s == "none") return GlobalScope::none;
  if (s == "restricted_to_RXGamma") return GlobalScope::restricted_to_RXGamma;
  if (s == "global") return GlobalScope::global;
  throw InputError("unknown global_min_scope '" + std::string(s) + "'");
}

bool Certificate::operator==(const Certificate& o) const {
  return feasible == o.feasible && same_double(feasibility_residual, o.feasibility_residual) &&
         rank_s == o.rank_s && vectors_equal(multipliers, o.multipliers) &&
         multipliers_unique == o.multipliers_unique &&
         same_double(stationary_residual, o.stationary_residual) &&
         f_stationary == o.f_stationary && same_double(alpha, o.alpha) &&
         same_double(beta, o.beta) && alpha_stationary == o.alpha_stationary &&
         sonc == o.sonc && same_double(sonc_min_eigenvalue, o.sonc_min_eigenvalue) &&
         sosc == o.sosc && same_double(sosc_min_value, o.sosc_min_value) &&
         second_order_partial == o.second_order_partial && sosc_sampled == o.sosc_sampled &&
         global_min_scope == o.global_min_scope && qualification == o.qualification &&
         notes == o.notes;
}

Matrix lagrangian_grad(const Problem& prob, const Matrix& X, const Vector& y) {
  if (X.rows() != prob.rows() || X.cols() != prob.cols()) {
    throw InputError("lagrangian_grad: point shape does not match the problem");
  }
  return gradient_checked(prob.objective, X) + adjoint(prob.constraints, y);
}

MultiplierEstimate estimate_multipliers(const Problem& prob, const SvdPoint& P) {
  const Index s = P.rank();
  if (s > prob.rank) {
    throw InvalidPointError("estimate_multipliers: point has rank " + std::to_string(s) + " > " +
                            std::to_string(prob.rank));
  }
  const AffineSet& S = prob.constraints;
  const Index l = S.size();
  const Matrix grad_w = P.to_working(gradient_checked(prob.objective, P.caller_x()));

  Vector target;
  Matrix design;
  if (s == prob.rank) {
    target = -normal_rows(P, grad_w);
    design.resize(target.size(), l);
    for (Index i = 0; i < l; ++i) design.col(i) = normal_rows(P, P.to_working(S.mats()[i]));
  } else {
    target = -grad_w.reshaped();
    design.resize(target.size(), l);
    for (Index i = 0; i < l; ++i) design.col(i) = P.to_working(S.mats()[i]).reshaped();
  }

  MultiplierEstimate out;
  if (l == 0) {
    out.y = Vector(0);
    out.residual = target.norm();
    return out;
  }
  if (target.size() == 0) {
    out.y = Vector::Zero(l);
    out.unique = false;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kLstsqThreshold);
  out.y = svd.solve(target);
  out.unique = svd.rank() == l;
  out.residual = (design * out.y - target).norm();
  return out;
}

double stationarity_residual(const Problem& prob, const SvdPoint& P, const Vector& y) {
  if (P.rank() > prob.rank) throw InvalidPointError("stationarity_residual: rank exceeds bound");
  const Matrix G = P.to_working(lagrangian_grad(prob, P.caller_x(), y));
  if (P.rank() == prob.rank) return normal_rows(P, G).norm();
  return G.norm();
}

Certificate certify_F(const Problem& prob, const Matrix& X, const CertifyOptions& opt) {
  const Feasibility fz = assess(prob, X, opt);
  if (!fz.feasible) {
    return infeasible_certificate(prob, 1.0, fz.residual, fz.point.rank());
  }
  Certificate c;
  c.feasible = true;
  c.feasibility_residual = fz.residual;
  c.rank_s = fz.point.rank();
  const Matrix grad_f = gradient_checked(prob.objective, X);
  fill_first_order(prob, fz.point, grad_f, opt, c);
  return c;
}

double beta_threshold(const SvdPoint& P, Index r, const Matrix& grad_L, double zero_tol) {
  const double g = spectral_norm(grad_L);
  if (g <= zero_tol) return kInfinity;
  if (P.rank() < r) return 0.0;
  return P.sigma_at(r) / g;
}

AlphaCheck check_alpha(const Problem& prob, const SvdPoint& P, const Vector& y, double alpha,
                       const CertifyOptions& opt) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InputError("alpha must be positive and finite");
  }
  const Index r = prob.rank;
  const Index s = P.rank();
  if (s > r) throw InvalidPointError("check_alpha: rank exceeds bound");
  const Matrix X = P.caller_x();
  const Matrix grad_f = gradient_checked(prob.objective, X);
  const Matrix G = grad_f + adjoint(prob.constraints, y);
  const double tol_s = stationarity_scale(opt, grad_f);

  AlphaCheck out;
  // (a) fixed point of the projected gradient step.
  const Matrix Z = X - alpha * G;
  const RankProjection proj = project_rank(Z, r);
  out.ambiguous = proj.ambiguous;
  out.fixed_point_residual = (X - proj.point).norm() / alpha;
  out.direct = out.fixed_point_residual <= tol_s;
  double attain_gap = kInfinity;
  if (!out.direct && proj.ambiguous) {
    attain_gap = ((Z - X).norm() - (Z - proj.point).norm()) / alpha;
    out.direct = attain_gap <= tol_s;
  }

  // (b) closed form.
  double closed_measure = 0.0;
  if (s == r) {
    closed_measure = stationarity_residual(prob, P, y);
    const double g2 = spectral_norm(G);
    const double sr = P.sigma_at(r);
    out.closed_form =
        closed_measure <= tol_s && alpha * g2 <= sr * (1.0 + opt.boundary_slack);
    out.boundary_hit = std::abs(alpha * g2 - sr) <= opt.boundary_slack * sr;
    out.near_tolerance = std::abs(alpha * g2 - sr) <= 1e-6 * sr;
  } else {
    closed_measure = G.norm();
    out.closed_form = closed_measure <= tol_s;
  }

  auto in_band = [&](double v) { return v >= tol_s / kConsistencyBand && v <= tol_s * kConsistencyBand; };
  out.near_tolerance = out.near_tolerance || in_band(closed_measure) ||
                       in_band(out.fixed_point_residual) || in_band(attain_gap);
  if (out.direct != out.closed_form && !out.near_tolerance) {
    std::ostringstream os;
    os << "alpha-stationarity routes disagree: direct=" << out.direct
       << " closed_form=" << out.closed_form << " alpha=" << alpha
       << " fixed_point_residual=" << out.fixed_point_residual
       << " closed_measure=" << closed_measure << " tol=" << tol_s << " s=" << s << " r=" << r;
    throw ConsistencyError(os.str());
  }
  return out;
}

Certificate certify_alpha(const Problem& prob, const Matrix& X, const Vector& y, double alpha,
                          const CertifyOptions& opt) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InputError("alpha must be positive and finite");
  }
  if (y.size() != prob.constraints.size()) {
    throw InputError("certify_alpha: expected " + std::to_string(prob.constraints.size()) +
                     " multipliers, got " + std::to_string(y.size()));
  }
  const Feasibility fz = assess(prob, X, opt);
  if (!fz.feasible) return infeasible_certificate(prob, alpha, fz.residual, fz.point.rank());

  Certificate c;
  c.feasible = true;
  c.feasibility_residual = fz.residual;
  c.rank_s = fz.point.rank();
  c.alpha = alpha;
  c.multipliers = y;
  c.stationary_residual = stationarity_residual(prob, fz.point, y);
  const Matrix grad_f = gradient_checked(prob.objective, X);
  const Matrix G = grad_f + adjoint(prob.constraints, y);
  c.f_stationary = c.stationary_residual <= stationarity_scale(opt, grad_f);
  c.beta = beta_threshold(fz.point, prob.rank, G, stationarity_scale(opt, grad_f));

  const AlphaCheck chk = check_alpha(prob, fz.point, y, alpha, opt);
  c.alpha_stationary = chk.closed_form;
  if (chk.boundary_hit) c.notes.push_back("alpha sits on the sigma_r / ||grad L||_2 boundary");
  if (chk.ambiguous) c.notes.push_back("projection tie met; distance attainment tested");
  if (chk.direct != chk.closed_form) {
    c.notes.push_back("direct and closed-form alpha tests differ within the tolerance band");
  }
  return c;
}

std::vector<Matrix> constrained_basis(const std::vector<Matrix>& basis,
                                      const std::vector<Matrix>& constraints, double rank_tol) {
  const Index d = static_cast<Index>(basis.size());
  if (d == 0) return {};
  const Index k = static_cast<Index>(constraints.size());
  Matrix N;
  if (k == 0) {
    N = Matrix::Identity(d, d);
  } else {
    Matrix M(k, d);
    double scale = 0.0;
    for (Index i = 0; i < k; ++i) {
      scale = std::max(scale, constraints[i].norm());
      for (Index j = 0; j < d; ++j) M(i, j) = constraints[i].cwiseProduct(basis[j]).sum();
    }
    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
    const Vector& sig = svd.singularValues();
    const double thresh = rank_tol * std::max(scale, 1e-300);
    Index rank = 0;
    for (Index i = 0; i < sig.size(); ++i) {
      if (sig[i] > thresh) ++rank;
    }
    N = svd.matrixV().rightCols(d - rank);
  }
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(N.cols()));
  for (Index c = 0; c < N.cols(); ++c) {
    Matrix D = Matrix::Zero(basis.front().rows(), basis.front().cols());
    for (Index j = 0; j < d; ++j) D += N(j, c) * basis[j];
    out.push_back(std::move(D));
  }
  return out;
}

double restricted_hessian_min(const Objective& f, const Matrix& X,
                              const std::vector<Matrix>& basis) {
  const Index d = static_cast<Index>(basis.size());
  if (d == 0) return kInfinity;
  Matrix Q(d, d);
  for (Index p = 0; p < d; ++p) {
    for (Index q = p; q < d; ++q) {
      Q(p, q) = Q(q, p) = f.bilinear(X, basis[p], basis[q]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Q, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()[0];
}

namespace {

struct SecondOrderSetup {
  SvdPoint P;
  IndexFamily family;
  std::vector<Matrix> constraints;
};

SecondOrderSetup second_order_setup(const Problem& prob, const Matrix& X,
                                    const CertifyOptions& opt) {
  check_structure(prob, X);
  SecondOrderSetup st;
  st.P = svd_point(X, RankTolerances{opt.rank_tol, 1e-14});
  st.family = enumerate_J(st.P, prob.rank, opt.family_cap);
  st.constraints = structural_constraints(prob);
  return st;
}

std::vector<SubspaceReport> per_set_minima(const Problem& prob, const Matrix& X,
                                           const SecondOrderSetup& st, ExecPolicy policy) {
  return map_indices<SubspaceReport>(st.family.sets.size(), policy, [&](std::size_t k) {
    SubspaceReport rep;
    rep.J = st.family.sets[k];
    const std::vector<Matrix> B = constrained_basis(rxj_basis(st.P, rep.J), st.constraints);
    rep.dimension = static_cast<Index>(B.size());
    rep.min_eigenvalue = restricted_hessian_min(prob.objective, X, B);
    return rep;
  });
}

// Largest |Hessian form| on unit coordinate directions; scales the PSD slack.
double hessian_scale(const Objective& f, const Matrix& X) {
  double scale = 0.0;
  const Index m = X.rows();
  const Index n = X.cols();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      Matrix E = Matrix::Zero(m, n);
      E(i, j) = 1.0;
      scale = std::max(scale, std::abs(f.quadform(X, E)));
    }
  }
  return scale;
}

}  // namespace

SecondOrderReport second_order_necessary(const Problem& prob, const Matrix& X, const Vector& y,
                                         const CertifyOptions& opt) {
  (void)y;
  SecondOrderReport out;
  if (!prob.objective.has_hessian()) {
    check_structure(prob, X);
    return out;
  }
  const SecondOrderSetup st = second_order_setup(prob, X, opt);
  out.partial = st.family.truncated;
  out.qualified = check_assumption(build_TR(st.P, prob.constraints).R).independent;
  out.per_set = per_set_minima(prob, X, st, opt.policy);
  out.min_value = kInfinity;
  for (const SubspaceReport& rep : out.per_set) out.min_value = std::min(out.min_value, rep.min_eigenvalue);
  const double bound = -opt.psd_tol * (1.0 + hessian_scale(prob.objective, X));
  out.verdict = out.min_value >= bound ? Verdict::holds : Verdict::fails;
  return out;
}

SecondOrderReport second_order_sufficient(const Problem& prob, const Matrix& X, const Vector& y,
                                          const CertifyOptions& opt) {
  (void)y;
  SecondOrderReport out;
  if (!prob.objective.has_hessian()) {
    check_structure(prob, X);
    return out;
  }
  const SecondOrderSetup st = second_order_setup(prob, X, opt);
  const SvdPoint& P = st.P;
  const Index s = P.rank();
  const Index r = prob.rank;
  out.partial = st.family.truncated;

  // Exact part: T_L ∩ T_{R_s}(X), a subspace contained in the cone.
  const std::vector<Matrix> T = tangent_basis(P);
  const std::vector<Matrix> TL = constrained_basis(T, st.constraints);
  out.min_value = restricted_hessian_min(prob.objective, X, TL);
  if (s == r) {
    out.verdict = out.min_value > opt.pd_tol ? Verdict::holds : Verdict::fails;
    return out;
  }

  // Each R_X(J) ∩ T_L also lies in the cone.
  out.per_set = per_set_minima(prob, X, st, opt.policy);
  for (const SubspaceReport& rep : out.per_set) out.min_value = std::min(out.min_value, rep.min_eigenvalue);
  if (!(out.min_value > opt.pd_tol)) {
    out.verdict = Verdict::fails;
    return out;
  }
  if (prob.structure == Structure::diagonal) {
    // Diagonal directions with at most r nonzeros are covered by the sets J.
    out.verdict = Verdict::holds;
    return out;
  }

  // Remaining directions: tangent part plus a rank-(r - s) normal part,
  // corrected back into T_L within T_{R_s}.
  const Index m = P.rows();
  const Index n = P.cols();
  const Index k = r - s;
  const Index d = static_cast<Index>(T.size());
  const Index l = prob.constraints.size();
  Matrix Mt(l, d);
  for (Index i = 0; i < l; ++i) {
    for (Index j = 0; j < d; ++j) Mt(i, j) = prob.constraints.mats()[i].cwiseProduct(T[j]).sum();
  }
  Eigen::JacobiSVD<Matrix> tsvd;
  if (l > 0 && d > 0) {
    tsvd.compute(Mt, Eigen::ComputeThinU | Eigen::ComputeThinV);
    tsvd.setThreshold(kLstsqThreshold);
  }
  const Matrix Up = P.u().rightCols(m - s);
  const Matrix Vp = P.v().rightCols(n - s);

  struct Sample {
    bool accepted = false;
    double value = 0.0;
  };
  const std::vector<Sample> samples =
      map_indices<Sample>(opt.samples, opt.policy, [&](std::size_t idx) {
        std::mt19937_64 rng(opt.seed + idx);
        std::normal_distribution<double> gauss;
        auto randn = [&](Index rows, Index cols) {
          Matrix M(rows, cols);
          for (Index j = 0; j < cols; ++j) {
            for (Index i = 0; i < rows; ++i) M(i, j) = gauss(rng);
          }
          return M;
        };
        Matrix normal = Up * randn(m - s, k) * (Vp * randn(n - s, k)).transpose();
        normal /= std::max(normal.norm(), 1e-300);
        Matrix tangent = randn(m, n);
        tangent -= Up * (Up.transpose() * tangent * Vp) * Vp.transpose();
        Matrix xi = P.to_caller(tangent + normal);
        Sample out_s;
        if (l > 0) {
          const Vector rhs = apply(prob.constraints, xi);
          const Vector c = d > 0 ? Vector(tsvd.solve(rhs)) : Vector(0);
          if ((Mt * c - rhs).norm() > 1e-10 * (1.0 + rhs.norm())) return out_s;
          for (Index j = 0; j < d; ++j) xi -= c[j] * T[j];
        }
        const double nrm2 = xi.squaredNorm();
        if (nrm2 == 0.0) return out_s;
        out_s.accepted = true;
        out_s.value = prob.objective.quadform(X, xi) / nrm2;
        return out_s;
      });
  for (const Sample& smp : samples) {
    if (!smp.accepted) continue;
    ++out.samples_used;
    out.min_value = std::min(out.min_value, smp.value);
  }
  out.sampled = out.samples_used > 0;
  out.verdict = out.min_value > opt.pd_tol ? Verdict::holds : Verdict::fails;
  return out;
}

Certificate classify(const Problem& prob, const Matrix& X, std::optional<double> alpha,
                     const CertifyOptions& opt) {
  if (alpha && (!(*alpha > 0.0) || !std::isfinite(*alpha))) {
    throw InputError("alpha must be positive and finite");
  }
  const Feasibility fz = assess(prob, X, opt);
  if (!fz.feasible) {
    return infeasible_certificate(prob, alpha.value_or(1.0), fz.residual, fz.point.rank());
  }
  const SvdPoint& P = fz.point;
  Certificate c;
  c.feasible = true;
  c.feasibility_residual = fz.residual;
  c.rank_s = P.rank();
  c.qualification = qualify(P, prob.constraints, prob.rank, opt.policy);

  const Matrix grad_f = gradient_checked(prob.objective, X);
  fill_first_order(prob, P, grad_f, opt, c);
  if (!c.qualification.assumption1) {
    c.notes.push_back("T-block independence fails; a non-stationary verdict is not a necessary-condition violation");
  }

  const Matrix G = grad_f + adjoint(prob.constraints, c.multipliers);
  c.beta = beta_threshold(P, prob.rank, G, stationarity_scale(opt, grad_f));
  if (alpha) {
    c.alpha = *alpha;
  } else {
    c.alpha = std::isfinite(c.beta) && c.beta > 0.0 ? 0.5 * c.beta : 1.0;
  }
  const AlphaCheck chk = check_alpha(prob, P, c.multipliers, c.alpha, opt);
  c.alpha_stationary = chk.closed_form;
  if (chk.boundary_hit) c.notes.push_back("alpha sits on the sigma_r / ||grad L||_2 boundary");
  if (chk.direct != chk.closed_form) {
    c.notes.push_back("direct and closed-form alpha tests differ within the tolerance band");
  }
  if (c.alpha < c.beta && c.alpha_stationary != c.f_stationary) {
    c.notes.push_back("alpha below beta but alpha- and F-stationarity differ at tolerance (residual " +
                      format_double(c.stationary_residual) + ")");
  }

  if (prob.objective.has_hessian()) {
    const SecondOrderReport nec = second_order_necessary(prob, X, c.multipliers, opt);
    const SecondOrderReport suf = second_order_sufficient(prob, X, c.multipliers, opt);
    c.sonc = nec.verdict;
    c.sonc_min_eigenvalue = nec.min_value;
    c.sosc = suf.verdict;
    c.sosc_min_value = suf.min_value;
    c.second_order_partial = nec.partial || suf.partial;
    c.sosc_sampled = suf.sampled;
    if (!nec.qualified) c.notes.push_back("R-block independence fails; second-order necessary check is unqualified");
    if (c.second_order_partial) c.notes.push_back("index-set family truncated; second-order verdicts are partial");
  } else {
    c.notes.push_back("objective has no Hessian; second-order checks not applicable");
  }
  return c;
}

}  // namespace rankcertify
