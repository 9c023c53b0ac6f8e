#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fewbody/grid.hpp"
#include "fewbody/trap.hpp"

namespace fewbody {

// Tolerances for the one-body solver. Defaults match the project-wide
// reference values; every one of them can be overridden per solve.
struct OneBodyConfig {
  double tol_ortho = 1e-8;
  double degeneracy_tol = 1e-9;
  double boundary_tol = 1e-7;
};

// Solved one-particle spectrum on a grid: energies eps_n, real wavefunctions
// phi_n(q_i) with the first nonzero lobe positive, derivatives, and parities
// (-1)^n when the trap is symmetric and the grid is centered on it.
class OneBodySolution {
 public:
  OneBodySolution(TrapSpec trap, Grid grid, Eigen::VectorXd energies,
                  Eigen::MatrixXd wavefunctions, Eigen::MatrixXd derivatives,
                  std::vector<int> parities);

  const TrapSpec& trap() const { return trap_; }
  const Grid& grid() const { return grid_; }
  int n_states() const { return static_cast<int>(energies_.size()); }

  double energy(int n) const { return energies_[check(n)]; }
  const Eigen::VectorXd& energies() const { return energies_; }

  // n_points x n_states; column n holds phi_n on the grid.
  const Eigen::MatrixXd& wavefunctions() const { return wavefunctions_; }
  const Eigen::MatrixXd& derivatives() const { return derivatives_; }
  Eigen::VectorXd wavefunction(int n) const { return wavefunctions_.col(check(n)); }
  Eigen::VectorXd derivative(int n) const { return derivatives_.col(check(n)); }

  bool has_parities() const { return !parities_.empty(); }
  const std::vector<int>& parities() const { return parities_; }

  const Eigen::VectorXd& points() const { return points_; }
  double h() const { return grid_.spacing(); }

 private:
  int check(int n) const;

  TrapSpec trap_;
  Grid grid_;
  Eigen::VectorXd points_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd wavefunctions_;
  Eigen::MatrixXd derivatives_;
  std::vector<int> parities_;  // empty for asymmetric traps / off-center grids
};

// Lowest n_states eigenpairs of -1/2 d^2/dq^2 + V(q), second-order central
// differences with Dirichlet boundaries. The infinite well replaces the grid
// by the box [offset - width/2, offset + width/2] with the same n_points.
OneBodySolution solve_one_body(const TrapSpec& trap, const Grid& grid, int n_states,
                               const OneBodyConfig& cfg = {});

// Closed forms: harmonic -> n + 1/2; infinite well -> (pi^2 / 2 L^2) (n+1)^2.
double analytic_energy(const TrapSpec& trap, int n);

// (-1)^n for symmetric traps, cross-checked against the numeric reflection
// overlap of phi_n.
int parity_of(const OneBodySolution& sol, int n);

// Two-grid Richardson extrapolation of the n-th eigenvalue: solves on `grid`
// and on the coarse grid with doubled spacing, then removes the h^2 error.
// Requires odd n_points.
Eigen::VectorXd richardson_energies(const TrapSpec& trap, const Grid& grid,
                                    int n_states, const OneBodyConfig& cfg = {});

}  // namespace fewbody
