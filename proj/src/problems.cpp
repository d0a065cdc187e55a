#include "rankcertify/problems.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "rankcertify/errors.hpp"

namespace rankcertify {

double Objective::quadform(const Matrix& X, const Matrix& Xi) const {
  if (hessian_quadform) return hessian_quadform(X, Xi);
  if (hessian_bilinear) return hessian_bilinear(X, Xi, Xi);
  throw InputError("objective has no Hessian information");
}

double Objective::bilinear(const Matrix& X, const Matrix& A, const Matrix& B) const {
  if (hessian_bilinear) return hessian_bilinear(X, A, B);
  if (!hessian_quadform) throw InputError("objective has no Hessian information");
  return 0.25 * (hessian_quadform(X, A + B) - hessian_quadform(X, A - B));
}

Objective frobenius_distance_objective(const Matrix& H) {
  if (!H.allFinite()) throw InputError("frobenius_distance_objective: non-finite data");
  auto data = std::make_shared<const Matrix>(H);
  Objective f;
  f.value = [data](const Matrix& X) { return 0.5 * (*data - X).squaredNorm(); };
  f.gradient = [data](const Matrix& X) { return Matrix(X - *data); };
  f.hessian_quadform = [](const Matrix&, const Matrix& Xi) { return Xi.squaredNorm(); };
  f.hessian_bilinear = [](const Matrix&, const Matrix& A, const Matrix& B) {
    return A.cwiseProduct(B).sum();
  };
  f.convex = true;
  return f;
}

Objective quadratic_objective(const Matrix& Q, const Matrix& C) {
  if (Q.rows() != Q.cols() || Q.rows() != C.size()) {
    throw InputError("quadratic_objective: Q must be (mn x mn) with mn = size of C");
  }
  if (!Q.allFinite() || !C.allFinite()) throw InputError("quadratic_objective: non-finite data");
  auto q = std::make_shared<const Matrix>(0.5 * (Q + Q.transpose()));
  auto c = std::make_shared<const Matrix>(C);
  Objective f;
  f.value = [q, c](const Matrix& X) {
    const auto v = X.reshaped();
    return 0.5 * v.dot(*q * v) + c->cwiseProduct(X).sum();
  };
  f.gradient = [q, c](const Matrix& X) {
    Matrix g = *c;
    g.reshaped() += *q * X.reshaped();
    return g;
  };
  f.hessian_bilinear = [q](const Matrix&, const Matrix& A, const Matrix& B) {
    return A.reshaped().dot(*q * B.reshaped());
  };
  f.hessian_quadform = [q](const Matrix&, const Matrix& Xi) {
    const auto v = Xi.reshaped();
    return v.dot(*q * v);
  };
  if (q->size() == 0) {
    f.convex = true;
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(*q, Eigen::EigenvaluesOnly);
    f.convex = eig.eigenvalues().minCoeff() >= -1e-12 * std::max(1.0, q->norm());
  }
  return f;
}

AffineSet hankel_constraints(Index rows, Index cols) {
  std::vector<Matrix> mats;
  for (Index k = 1; k < rows; ++k) {
    for (Index j = 0; j + 1 < cols; ++j) {
      Matrix A = Matrix::Zero(rows, cols);
      A(k, j) = 1.0;
      A(k - 1, j + 1) = -1.0;
      mats.push_back(std::move(A));
    }
  }
  const Index l = static_cast<Index>(mats.size());
  return AffineSet(rows, cols, std::move(mats), Vector::Zero(l));
}

Problem hankel_problem(const Matrix& H, Index r) {
  const Index n = std::min(H.rows(), H.cols());
  if (r < 1 || r >= n) {
    throw InputError("hankel_problem: rank bound must satisfy 1 <= r < " + std::to_string(n));
  }
  Problem p;
  p.objective = frobenius_distance_objective(H);
  p.constraints = hankel_constraints(H.rows(), H.cols());
  p.rank = r;
  p.name = "hankel";
  return p;
}

Problem lrr_problem(const std::vector<Matrix>& B, Index r) {
  const Index N = static_cast<Index>(B.size());
  if (N < 2) throw InputError("lrr_problem: need at least two rows");
  if (r <= 1) throw InputError("lrr_problem: rank bound must exceed 1");
  if (r >= N) throw InputError("lrr_problem: rank bound must be below N");
  auto sym = std::make_shared<std::vector<Matrix>>();
  bool convex = true;
  for (const Matrix& Bi : B) {
    if (Bi.rows() != N || Bi.cols() != N) throw InputError("lrr_problem: B^i must be N x N");
    if (!Bi.allFinite()) throw InputError("lrr_problem: non-finite B^i");
    Matrix S = 0.5 * (Bi + Bi.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(S, Eigen::EigenvaluesOnly);
    convex = convex && eig.eigenvalues().minCoeff() >= -1e-12 * std::max(1.0, S.norm());
    sym->push_back(std::move(S));
  }

  Objective f;
  f.value = [sym](const Matrix& W) {
    double v = 0.0;
    for (Index i = 0; i < W.rows(); ++i) v += W.row(i).dot(W.row(i) * (*sym)[i]);
    return 0.5 * v;
  };
  f.gradient = [sym](const Matrix& W) {
    Matrix g(W.rows(), W.cols());
    for (Index i = 0; i < W.rows(); ++i) g.row(i) = W.row(i) * (*sym)[i];
    return g;
  };
  f.hessian_bilinear = [sym](const Matrix&, const Matrix& A, const Matrix& Bm) {
    double v = 0.0;
    for (Index i = 0; i < A.rows(); ++i) v += A.row(i).dot(Bm.row(i) * (*sym)[i]);
    return v;
  };
  f.hessian_quadform = [sym](const Matrix&, const Matrix& Xi) {
    double v = 0.0;
    for (Index i = 0; i < Xi.rows(); ++i) v += Xi.row(i).dot(Xi.row(i) * (*sym)[i]);
    return v;
  };
  f.convex = convex;

  std::vector<Matrix> rows;
  for (Index i = 0; i < N; ++i) {
    Matrix E = Matrix::Zero(N, N);
    E.row(i).setOnes();
    rows.push_back(std::move(E));
  }
  Problem p;
  p.objective = std::move(f);
  p.constraints = AffineSet(N, N, std::move(rows), Vector::Ones(N));
  p.rank = r;
  p.name = "lrr";
  return p;
}

VectorObjective vector_quadratic(const Matrix& Q, const Vector& c) {
  if (Q.rows() != Q.cols() || Q.rows() != c.size()) {
    throw InputError("vector_quadratic: Q must be n x n with n = size of c");
  }
  auto q = std::make_shared<const Matrix>(0.5 * (Q + Q.transpose()));
  auto cc = std::make_shared<const Vector>(c);
  VectorObjective g;
  g.value = [q, cc](const Vector& x) { return 0.5 * x.dot(*q * x) + cc->dot(x); };
  g.gradient = [q, cc](const Vector& x) { return Vector(*q * x + *cc); };
  g.hessian_quadform = [q](const Vector&, const Vector& d) { return d.dot(*q * d); };
  Eigen::SelfAdjointEigenSolver<Matrix> eig(*q, Eigen::EigenvaluesOnly);
  g.convex = q->size() == 0 || eig.eigenvalues().minCoeff() >= -1e-12 * std::max(1.0, q->norm());
  return g;
}

Problem diagonal_problem(const std::vector<Vector>& a, const Vector& b, Index r,
                         const VectorObjective& g) {
  if (a.empty() && b.size() != 0) throw InputError("diagonal_problem: size mismatch");
  if (static_cast<Index>(a.size()) != b.size()) {
    throw InputError("diagonal_problem: " + std::to_string(a.size()) + " vectors but " +
                     std::to_string(b.size()) + " right-hand sides");
  }
  if (!g.value || !g.gradient) throw InputError("diagonal_problem: objective is incomplete");
  Index n = 0;
  if (!a.empty()) {
    n = a.front().size();
  } else {
    throw InputError("diagonal_problem: at least one constraint is needed to fix the dimension");
  }
  if (r < 1 || r >= n) throw InputError("diagonal_problem: sparsity bound must satisfy 1 <= r < n");
  std::vector<Matrix> mats;
  for (const Vector& ai : a) {
    if (ai.size() != n) throw InputError("diagonal_problem: constraint vectors differ in length");
    mats.push_back(ai.asDiagonal().toDenseMatrix());
  }

  Objective f;
  f.value = [g](const Matrix& X) { return g.value(X.diagonal()); };
  f.gradient = [g](const Matrix& X) { return Matrix(g.gradient(X.diagonal()).asDiagonal()); };
  if (g.hessian_quadform) {
    f.hessian_quadform = [g](const Matrix& X, const Matrix& Xi) {
      return g.hessian_quadform(X.diagonal(), Xi.diagonal());
    };
  }
  f.convex = g.convex;

  Problem p;
  p.objective = std::move(f);
  p.constraints = AffineSet(n, n, std::move(mats), b);
  p.rank = r;
  p.name = "diagonal";
  p.structure = Structure::diagonal;
  return p;
}

void check_structure(const Problem& prob, const Matrix& X) {
  if (X.rows() != prob.rows() || X.cols() != prob.cols()) {
    throw InputError("point is " + std::to_string(X.rows()) + "x" + std::to_string(X.cols()) +
                     ", problem expects " + std::to_string(prob.rows()) + "x" +
                     std::to_string(prob.cols()));
  }
  if (!X.allFinite()) throw InputError("point has non-finite entries");
  if (prob.structure == Structure::diagonal) {
    Matrix off = X;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() != 0.0) {
      throw InputError("diagonal problem: candidate point has nonzero off-diagonal entries");
    }
  }
}

}  // namespace rankcertify
