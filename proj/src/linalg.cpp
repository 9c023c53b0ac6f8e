#include "fewbody/linalg.hpp"

#include <lapacke.h>

#include <cmath>
#include <vector>

#include "fewbody/errors.hpp"

namespace fewbody {

std::pair<Eigen::VectorXd, Eigen::MatrixXd> tridiag_lowest(
    const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, int k) {
  const int n = static_cast<int>(diag.size());
  if (k < 1 || k > n) throw Error("tridiag_lowest: bad k");
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(subdiag.data(), subdiag.data() + (n - 1));
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(k));
  lapack_int m = 0;
  lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(),
                                   0.0, 0.0, 1, k, 0.0, &m, w.data(), z.data(), n,
                                   isuppz.data());
  if (info != 0 || m != k) throw NonconvergedEigensolver("dstevr failed");
  return {w.head(k), z};
}

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd work = a;
  Eigen::VectorXd w(n);
  lapack_int info =
      LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
  if (info != 0) throw NonconvergedEigensolver("dsyev failed");
  return w;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eigensystem(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd vec = a;
  Eigen::VectorXd w(n);
  lapack_int info =
      LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'L', n, vec.data(), n, w.data());
  if (info != 0) throw NonconvergedEigensolver("dsyev failed");
  return {w, vec};
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_lowest(const Eigen::MatrixXd& a, int k) {
  const int n = static_cast<int>(a.rows());
  if (k < 1 || k > n) throw Error("sym_lowest: bad k");
  Eigen::MatrixXd work = a;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(k));
  lapack_int m = 0;
  lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n,
                                   0.0, 0.0, 1, k, 0.0, &m, w.data(), z.data(), n,
                                   isuppz.data());
  if (info != 0 || m != k) throw NonconvergedEigensolver("dsyevr failed");
  return {w.head(k), z};
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> lanczos_lowest(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply, int dim,
    int k, int max_iter, double tol) {
  if (k < 1 || k > dim) throw Error("lanczos_lowest: bad k");
  const int m_max = std::min(dim, max_iter);

  // Deterministic start vector.
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = 1.0 + 0.5 * std::cos(1.0 + i);
  v.normalize();

  Eigen::MatrixXd basis(dim, m_max);
  std::vector<double> alpha, beta;
  basis.col(0) = v;

  Eigen::VectorXd prev_ritz;
  int m = 0;
  for (int j = 0; j < m_max; ++j) {
    Eigen::VectorXd w = apply(basis.col(j));
    const double a = basis.col(j).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(j);
    if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
    const double b = w.norm();
    m = j + 1;

    if (m >= k && (j % 8 == 7 || b < 1e-14 || j == m_max - 1)) {
      Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd e(m > 1 ? m - 1 : 0);
      for (int i = 0; i + 1 < m; ++i) e[i] = beta[i];
      auto [vals, vecs] = m > 1 ? tridiag_lowest(d, e, std::min(k, m))
                                : std::pair<Eigen::VectorXd, Eigen::MatrixXd>{
                                      d, Eigen::MatrixXd::Identity(1, 1)};
      if (prev_ritz.size() == vals.size() &&
          (vals - prev_ritz).cwiseAbs().maxCoeff() < tol) {
        Eigen::MatrixXd x = basis.leftCols(m) * vecs;
        return {vals, x};
      }
      prev_ritz = vals;
      if (b < 1e-14) {
        Eigen::MatrixXd x = basis.leftCols(m) * vecs;
        return {vals, x};
      }
    }
    if (j + 1 < m_max) {
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }
  }
  // Did not hit the tolerance; return the best estimate from the last pass.
  Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd e(m - 1);
  for (int i = 0; i + 1 < m; ++i) e[i] = beta[i];
  auto [vals, vecs] = tridiag_lowest(d, e, std::min(k, m));
  Eigen::MatrixXd x = basis.leftCols(m) * vecs;
  return {vals, x};
}

}  // namespace fewbody
