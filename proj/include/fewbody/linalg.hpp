#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>

namespace fewbody {

// Eigenpairs are returned ascending. All routines are deterministic for
// identical inputs (LAPACK dstevr / dsyevr behind the scenes).

// Lowest k eigenpairs of the symmetric tridiagonal matrix with the given
// diagonal and subdiagonal.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> tridiag_lowest(
    const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, int k);

// Full spectrum of a dense symmetric matrix (no eigenvectors).
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& a);

// Full eigensystem of a dense symmetric matrix.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eigensystem(const Eigen::MatrixXd& a);

// Lowest k eigenpairs of a dense symmetric matrix.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_lowest(const Eigen::MatrixXd& a, int k);

// Lanczos with full reorthogonalization for the lowest k eigenpairs of a
// matrix-free symmetric operator. Intended for large contact-interaction
// blocks where the dense path would not fit the desk-scale budget.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> lanczos_lowest(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply, int dim,
    int k, int max_iter = 400, double tol = 1e-11);

}  // namespace fewbody
