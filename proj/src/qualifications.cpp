#include "rankcertify/qualifications.hpp"

#include <string>
#include <tuple>

#include "rankcertify/errors.hpp"

namespace rankcertify {

ProjectedConstraints build_TR(const SvdPoint& P, const AffineSet& S) {
  if (S.rows() != P.caller_x().rows() || S.cols() != P.caller_x().cols()) {
    throw InputError("build_TR: constraint shape does not match the point");
  }
  const Index m = P.rows();
  const Index n = P.cols();
  const Index s = P.rank();
  ProjectedConstraints out;
  for (const Matrix& A : S.mats()) {
    Matrix C = P.u().transpose() * P.to_working(A) * P.v();
    C.bottomRightCorner(m - s, n - s).setZero();
    Matrix R = Matrix::Zero(m, n);
    R.topLeftCorner(s, s) = C.topLeftCorner(s, s);
    out.T.push_back(P.to_caller(C));
    out.R.push_back(P.to_caller(R));
  }
  return out;
}

IndependenceCheck check_assumption(const std::vector<Matrix>& mats) {
  IndependenceCheck out;
  if (mats.empty()) return out;
  const Index l = static_cast<Index>(mats.size());
  Matrix stack(l, mats.front().size());
  for (Index i = 0; i < l; ++i) stack.row(i) = mats[i].reshaped().transpose();
  Eigen::JacobiSVD<Matrix> svd(stack);
  const Vector& sig = svd.singularValues();
  out.sigma_min = l <= sig.size() ? sig[l - 1] : 0.0;
  const double smax = sig.size() > 0 ? sig[0] : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sig.size(); ++i) {
    if (sig[i] > 1e-10 * smax && sig[i] > 0.0) ++rank;
  }
  out.independent = rank == l;
  return out;
}

std::pair<bool, bool> check_dimension_conditions(const SvdPoint& P, const AffineSet& S) {
  const Index m = P.rows();
  const Index n = P.cols();
  const Index s = P.rank();
  const Index l = S.size();
  return {l <= m * n - (m - s) * (n - s), l <= s * s};
}

std::vector<Matrix> frechet_RXr_basis(const SvdPoint& P, Index r) {
  const Index m = P.rows();
  const Index n = P.cols();
  const Index s = P.rank();
  std::vector<Matrix> basis;
  if (s >= r) return basis;
  if (s == r - 1) {
    for (Index i = s; i < n; ++i) {
      for (Index j = s; j < n; ++j) {
        if (i != j) basis.push_back(P.to_caller(P.u().col(i) * P.v().col(j).transpose()));
      }
    }
  }
  for (Index k = n; k < m; ++k) {
    for (Index j = 0; j < n; ++j) {
      basis.push_back(P.to_caller(P.u().col(k) * P.v().col(j).transpose()));
    }
  }
  return basis;
}

Verdict check_normal_in_tangent(const SvdPoint& P, const AffineSet& S, Index r, double tol,
                                ExecPolicy policy) {
  if (P.rank() > r) throw InvalidPointError("check_normal_in_tangent: rank exceeds bound");
  if (P.rank() == r) return Verdict::not_applicable;
  const std::vector<Matrix> basis = frechet_RXr_basis(P, r);
  const bool ok = all_of_indices(basis.size(), policy,
                                 [&](std::size_t k) { return in_tangent_L(S, basis[k], tol); });
  return ok ? Verdict::holds : Verdict::fails;
}

QualificationReport qualify(const SvdPoint& P, const AffineSet& S, Index r, ExecPolicy policy) {
  QualificationReport rep;
  const ProjectedConstraints tr = build_TR(P, S);
  const IndependenceCheck t = check_assumption(tr.T);
  const IndependenceCheck q = check_assumption(tr.R);
  rep.assumption1 = t.independent;
  rep.assumption2 = q.independent;
  rep.sigma_min_T = t.sigma_min;
  rep.sigma_min_R = q.sigma_min;
  std::tie(rep.dim_ok_1, rep.dim_ok_2) = check_dimension_conditions(P, S);
  rep.normal_in_tangent = check_normal_in_tangent(P, S, r, 1e-8, policy);
  return rep;
}

}  // namespace rankcertify
