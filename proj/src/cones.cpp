#include "rankcertify/cones.hpp"

#include <cmath>
#include <string>

#include "rankcertify/errors.hpp"

namespace rankcertify {

namespace {

Matrix working_checked(const SvdPoint& P, const Matrix& M, const char* what) {
  if (!P.matches(M)) {
    throw InputError(std::string(what) + ": matrix is " + std::to_string(M.rows()) + "x" +
                     std::to_string(M.cols()) + ", point has a different shape");
  }
  return P.to_working(M);
}

void require_in_rank_set(const SvdPoint& P, Index r, const char* what) {
  if (r < 0 || r > P.cols()) {
    throw InputError(std::string(what) + ": rank bound out of range");
  }
  if (P.rank() > r) {
    throw InvalidPointError(std::string(what) + ": point has rank " +
                            std::to_string(P.rank()) + " > " + std::to_string(r));
  }
}

// U_{Γm⊥}^T M V_{Γn⊥} in working orientation.
Matrix normal_block(const SvdPoint& P, const Matrix& Mw) {
  const Index s = P.rank();
  return P.u().rightCols(P.rows() - s).transpose() * Mw * P.v().rightCols(P.cols() - s);
}

Matrix columns(const Matrix& M, const IndexSet& idx) {
  Matrix out(M.rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Index>(k)) = M.col(idx[k]);
  return out;
}

// Block rank rule shared by the Bouligand and Mordukhovich tests: singular
// values count when above tol * (1 + ||reference||_F).
Index block_rank(const Matrix& B, double tol, double reference_norm) {
  return numerical_rank(B, tol, 1.0 + reference_norm);
}

}  // namespace

bool in_tangent_fixed_rank(const SvdPoint& P, const Matrix& Xi, double tol) {
  const Matrix Xw = working_checked(P, Xi, "in_tangent_fixed_rank");
  return normal_block(P, Xw).norm() <= tol * (1.0 + Xi.norm());
}

bool in_normal_fixed_rank(const SvdPoint& P, const Matrix& W, double tol) {
  const Matrix Ww = working_checked(P, W, "in_normal_fixed_rank");
  const Index s = P.rank();
  const double bound = tol * (1.0 + W.norm());
  return (P.u().leftCols(s).transpose() * Ww).norm() <= bound &&
         (Ww * P.v().leftCols(s)).norm() <= bound;
}

Matrix project_normal_fixed_rank(const SvdPoint& P, const Matrix& M) {
  const Matrix Mw = working_checked(P, M, "project_normal_fixed_rank");
  const Index s = P.rank();
  const auto Up = P.u().rightCols(P.rows() - s);
  const auto Vp = P.v().rightCols(P.cols() - s);
  return P.to_caller(Up * (Up.transpose() * Mw * Vp) * Vp.transpose());
}

bool in_bouligand_rank_set(const SvdPoint& P, Index r, const Matrix& Xi, double tol) {
  const Matrix Xw = working_checked(P, Xi, "in_bouligand_rank_set");
  require_in_rank_set(P, r, "in_bouligand_rank_set");
  return block_rank(normal_block(P, Xw), tol, Xi.norm()) <= r - P.rank();
}

bool in_frechet_rank_set(const SvdPoint& P, Index r, const Matrix& W, double tol) {
  working_checked(P, W, "in_frechet_rank_set");
  require_in_rank_set(P, r, "in_frechet_rank_set");
  if (P.rank() == r) return in_normal_fixed_rank(P, W, tol);
  return W.norm() <= tol;
}

bool in_mordukhovich_rank_set(const SvdPoint& P, Index r, const Matrix& W, double tol) {
  working_checked(P, W, "in_mordukhovich_rank_set");
  require_in_rank_set(P, r, "in_mordukhovich_rank_set");
  if (!in_normal_fixed_rank(P, W, tol)) return false;
  return block_rank(W, tol, W.norm()) <= P.cols() - r;
}

IndexFamily enumerate_J(const SvdPoint& P, Index r, std::size_t cap) {
  const Index n = P.cols();
  const Index s = P.rank();
  if (r < 1 || r > n) throw InputError("enumerate_J: rank bound out of range");
  if (s > r) {
    throw InvalidPointError("enumerate_J: point has rank " + std::to_string(s) + " > " +
                            std::to_string(r));
  }
  IndexFamily fam;
  fam.gamma = P.gamma();
  fam.r = r;

  // Choose r - s extra indices from {s..n-1} in lexicographic order.
  const Index extra = r - s;
  IndexSet pick(static_cast<std::size_t>(extra));
  for (Index k = 0; k < extra; ++k) pick[k] = s + k;
  while (true) {
    if (fam.sets.size() == cap) {
      fam.truncated = true;
      break;
    }
    IndexSet J = fam.gamma;
    J.insert(J.end(), pick.begin(), pick.end());
    fam.sets.push_back(std::move(J));

    Index k = extra - 1;
    while (k >= 0 && pick[k] == n - extra + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (Index t = k + 1; t < extra; ++t) pick[t] = pick[t - 1] + 1;
  }
  return fam;
}

bool in_normal_RXJ(const SvdPoint& P, const IndexSet& J, const Matrix& W, double tol) {
  const Matrix Ww = working_checked(P, W, "in_normal_RXJ");
  for (Index j : J) {
    if (j < 0 || j >= P.cols()) throw InputError("in_normal_RXJ: index out of range");
  }
  const Matrix block = columns(P.u(), J).transpose() * Ww * columns(P.v(), J);
  return block.norm() <= tol * (1.0 + W.norm());
}

FrechetRXrResult in_frechet_RXr(const SvdPoint& P, Index r, const Matrix& W, double tol) {
  const Matrix Ww = working_checked(P, W, "in_frechet_RXr");
  require_in_rank_set(P, r, "in_frechet_RXr");
  const Index m = P.rows();
  const Index n = P.cols();
  const Index s = P.rank();
  const double bound = tol * (1.0 + W.norm());

  // Full coordinate matrix in the SVD basis; the top n x n part splits along Γ.
  const Matrix C = P.u().transpose() * Ww * P.v();
  FrechetRXrResult out;
  out.decomposition.D = C.block(s, s, n - s, n - s);
  out.decomposition.H = C.bottomRows(m - n);

  const double gg = C.topLeftCorner(s, s).norm();
  if (s == r) {
    out.decomposition.which = NormalConeCase::rank_full;
    out.member = gg <= bound;
  } else if (s == r - 1) {
    out.decomposition.which = NormalConeCase::rank_deficit_one;
    const double cross =
        std::hypot(C.block(s, 0, n - s, s).norm(), C.block(0, s, s, n - s).norm());
    const double diag = out.decomposition.D.diagonal().norm();
    out.member = gg <= bound && cross <= bound && diag <= bound;
  } else {
    out.decomposition.which = NormalConeCase::rank_deficit_two_plus;
    out.member = C.topRows(n).norm() <= bound;
  }
  return out;
}

bool in_frechet_RXr_by_enumeration(const SvdPoint& P, Index r, const Matrix& W, double tol,
                                   ExecPolicy policy) {
  working_checked(P, W, "in_frechet_RXr_by_enumeration");
  const IndexFamily fam = enumerate_J(P, r);
  return all_of_indices(fam.sets.size(), policy,
                        [&](std::size_t k) { return in_normal_RXJ(P, fam.sets[k], W, tol); });
}

FeasibleNormalResult in_frechet_normal_feasible(const SvdPoint& P, const AffineSet& S, Index r,
                                                const Matrix& W, bool qualified, double tol) {
  working_checked(P, W, "in_frechet_normal_feasible");
  require_in_rank_set(P, r, "in_frechet_normal_feasible");
  if (S.rows() != W.rows() || S.cols() != W.cols()) {
    throw InputError("in_frechet_normal_feasible: constraint shape mismatch");
  }
  FeasibleNormalResult out;
  out.qualified = qualified;
  const Index l = S.size();
  const double bound = tol * (1.0 + W.norm());

  if (P.rank() == r) {
    // Cone part is the subspace N_{R_s}(X); least squares on its complement.
    auto complement = [&](const Matrix& M) { return Matrix(M - project_normal_fixed_rank(P, M)); };
    const Matrix target = complement(W);
    Matrix design(W.size(), l);
    for (Index i = 0; i < l; ++i) {
      design.col(i) = complement(S.mats()[i]).reshaped();
    }
    if (l > 0) {
      Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
      svd.setThreshold(1e-10);
      out.y = svd.solve(target.reshaped());
    } else {
      out.y = Vector(0);
    }
    out.w2 = W - adjoint(S, out.y);
    out.residual = complement(out.w2).norm();
  } else {
    out.y = S.gram_solve(apply(S, W));
    out.w2 = W - adjoint(S, out.y);
    out.residual = out.w2.norm();
  }
  out.member = out.residual <= bound;
  return out;
}

}  // namespace rankcertify
