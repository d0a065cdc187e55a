#include "rankcertify/oracle.hpp"

#include <random>

#include "rankcertify/errors.hpp"

namespace rankcertify::oracle {

namespace {

Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix M(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) M(i, j) = g(rng);
  }
  return M;
}

}  // namespace

Matrix random_rank_r(Index m, Index n, Index r, std::uint64_t seed) {
  if (m < 1 || n < 1 || r < 0 || r > std::min(m, n)) throw InputError("random_rank_r: bad sizes");
  std::mt19937_64 rng(seed);
  const Matrix A = gaussian(m, r, rng);
  const Matrix B = gaussian(r, n, rng);
  return A * B;
}

double projection_oracle(const Matrix& X, Index r, int trials, std::uint64_t seed) {
  if (trials <= 0) return kInfinity;
  if (r < 0 || r > std::min(X.rows(), X.cols())) throw InputError("projection_oracle: bad rank");
  if (r == 0) return X.norm();
  std::mt19937_64 rng(seed);
  double best = kInfinity;
  for (int t = 0; t < trials; ++t) {
    Matrix A = gaussian(X.rows(), r, rng);
    Matrix B(r, X.cols());
    for (int sweep = 0; sweep < 20; ++sweep) {
      B = A.colPivHouseholderQr().solve(X);
      A = B.transpose().colPivHouseholderQr().solve(X.transpose()).transpose();
    }
    B = A.colPivHouseholderQr().solve(X);
    best = std::min(best, (X - A * B).norm());
  }
  return best;
}

std::vector<Matrix> sample_bouligand(const SvdPoint& P, Index r, int count, std::uint64_t seed) {
  const Index m = P.rows();
  const Index n = P.cols();
  const Index s = P.rank();
  if (s > r || r > n) throw InputError("sample_bouligand: need rank(X) <= r <= n");
  std::mt19937_64 rng(seed);
  const Matrix Up = P.u().rightCols(m - s);
  const Matrix Vp = P.v().rightCols(n - s);
  std::vector<Matrix> out;
  for (int k = 0; k < count; ++k) {
    Matrix T = gaussian(m, n, rng);
    T -= Up * (Up.transpose() * T * Vp) * Vp.transpose();
    Matrix N = Matrix::Zero(m, n);
    if (r > s) N = Up * gaussian(m - s, r - s, rng) * (Vp * gaussian(n - s, r - s, rng)).transpose();
    out.push_back(P.to_caller(T + N));
  }
  return out;
}

double default_step(const Matrix& X) { return 1e-5 * (1.0 + X.norm()); }

Matrix fd_gradient(const Objective& f, const Matrix& X, double h) {
  if (h <= 0.0) h = default_step(X);
  Matrix g(X.rows(), X.cols());
  Matrix Y = X;
  for (Index j = 0; j < X.cols(); ++j) {
    for (Index i = 0; i < X.rows(); ++i) {
      Y(i, j) = X(i, j) + h;
      const double fp = f.value(Y);
      Y(i, j) = X(i, j) - h;
      const double fm = f.value(Y);
      Y(i, j) = X(i, j);
      g(i, j) = (fp - fm) / (2.0 * h);
    }
  }
  return g;
}

double fd_quadform(const Objective& f, const Matrix& X, const Matrix& Xi, double h) {
  if (h <= 0.0) h = default_step(X);
  return (f.value(X + h * Xi) - 2.0 * f.value(X) + f.value(X - h * Xi)) / (h * h);
}

}  // namespace rankcertify::oracle
