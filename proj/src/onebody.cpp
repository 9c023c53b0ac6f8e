#include "fewbody/onebody.hpp"

#include <cmath>

#include "fewbody/linalg.hpp"

namespace fewbody {

namespace {

constexpr double kPi = 3.14159265358979323846;

Grid effective_grid(const TrapSpec& trap, const Grid& grid) {
  if (trap.kind == TrapKind::infinite_well) {
    Grid box = grid;
    box.q_min = trap.offset - trap.width / 2.0;
    box.q_max = trap.offset + trap.width / 2.0;
    return box;
  }
  return grid;
}

bool grid_centered_on(const Grid& g, double center) {
  return std::abs((g.q_min - center) + (g.q_max - center)) < 1e-9 * (g.q_max - g.q_min);
}

}  // namespace

OneBodySolution::OneBodySolution(TrapSpec trap, Grid grid, Eigen::VectorXd energies,
                                 Eigen::MatrixXd wavefunctions,
                                 Eigen::MatrixXd derivatives, std::vector<int> parities)
    : trap_(std::move(trap)),
      grid_(grid),
      points_(grid.points()),
      energies_(std::move(energies)),
      wavefunctions_(std::move(wavefunctions)),
      derivatives_(std::move(derivatives)),
      parities_(std::move(parities)) {}

int OneBodySolution::check(int n) const {
  if (n < 0 || n >= n_states()) throw StateOutOfRange("state index out of range");
  return n;
}

OneBodySolution solve_one_body(const TrapSpec& trap, const Grid& grid_in, int n_states,
                               const OneBodyConfig& cfg) {
  trap.validate();
  const Grid grid = effective_grid(trap, grid_in);
  grid.validate();
  if (n_states < 1) throw Error("n_states must be >= 1");
  if (n_states > grid.n_points / 4)
    throw GridTooSmall("n_states exceeds n_points/4; refine the grid");

  const int n = grid.n_points;
  const int m = n - 2;  // interior points (Dirichlet boundaries)
  const double h = grid.spacing();

  Eigen::VectorXd diag(m), sub(m - 1);
  for (int i = 0; i < m; ++i) {
    diag[i] = 1.0 / (h * h) + trap.potential(grid.point(i + 1));
    if (i + 1 < m) sub[i] = -0.5 / (h * h);
  }

  auto [vals, vecs] = tridiag_lowest(diag, sub, n_states);

  // Embed interior eigenvectors with zero boundary values and normalize so
  // that the trapezoid quadrature of phi^2 is exactly 1.
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n, n_states);
  const double scale = 1.0 / std::sqrt(h);
  for (int s = 0; s < n_states; ++s) {
    phi.block(1, s, m, 1) = vecs.col(s) * scale;
    // sign convention: first nonzero lobe from the left is positive
    const double amp = phi.col(s).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(phi(i, s)) > 1e-8 * amp) {
        if (phi(i, s) < 0) phi.col(s) *= -1.0;
        break;
      }
    }
  }

  // spectrum sanity: strictly increasing, non-degenerate
  for (int s = 0; s + 1 < n_states; ++s) {
    if (!(vals[s + 1] - vals[s] > cfg.degeneracy_tol))
      throw DegenerateSpectrum("one-body spectrum gap below degeneracy_tol");
  }

  // boundary amplitudes (skip for the hard-wall box where they vanish by
  // construction)
  if (trap.kind != TrapKind::infinite_well) {
    for (int s = 0; s < n_states; ++s) {
      const double edge = std::max(std::abs(phi(1, s)), std::abs(phi(n - 2, s)));
      if (edge > cfg.boundary_tol)
        throw GridTooSmall("requested state not bound on this grid");
    }
  }

  // orthonormality under the grid quadrature
  for (int a = 0; a < n_states; ++a)
    for (int b = a; b < n_states; ++b) {
      const double ov = trapezoid(Eigen::VectorXd(phi.col(a).cwiseProduct(phi.col(b))), h);
      const double target = (a == b) ? 1.0 : 0.0;
      if (std::abs(ov - target) > cfg.tol_ortho)
        throw NonconvergedEigensolver("orthonormality check failed");
    }

  // derivatives: central differences, one-sided second order at the ends
  Eigen::MatrixXd dphi(n, n_states);
  for (int s = 0; s < n_states; ++s) {
    for (int i = 1; i + 1 < n; ++i) dphi(i, s) = (phi(i + 1, s) - phi(i - 1, s)) / (2 * h);
    dphi(0, s) = (-3 * phi(0, s) + 4 * phi(1, s) - phi(2, s)) / (2 * h);
    dphi(n - 1, s) = (3 * phi(n - 1, s) - 4 * phi(n - 2, s) + phi(n - 3, s)) / (2 * h);
  }

  // parities for symmetric traps on centered grids, checked numerically via
  // the reflection overlap
  std::vector<int> parities;
  if (trap.is_symmetric() && grid_centered_on(grid, trap.offset)) {
    parities.resize(n_states);
    for (int s = 0; s < n_states; ++s) {
      double ov = 0.0;
      for (int i = 0; i < n; ++i) ov += phi(i, s) * phi(n - 1 - i, s);
      ov *= h;
      const int expected = (s % 2 == 0) ? 1 : -1;
      if (std::abs(ov - expected) > 1e-6)
        throw NonconvergedEigensolver("parity overlap inconsistent with (-1)^n");
      parities[s] = expected;
    }
  }

  return OneBodySolution(trap, grid, vals, std::move(phi), std::move(dphi),
                         std::move(parities));
}

double analytic_energy(const TrapSpec& trap, int n) {
  if (n < 0) throw StateOutOfRange("n must be >= 0");
  switch (trap.kind) {
    case TrapKind::harmonic:
      return n + 0.5;
    case TrapKind::infinite_well:
      return kPi * kPi / (2.0 * trap.width * trap.width) * (n + 1.0) * (n + 1.0);
    default:
      throw UnsupportedKind("no closed form for this trap");
  }
}

int parity_of(const OneBodySolution& sol, int n) {
  if (!sol.has_parities()) throw AsymmetricTrap("trap has no parity quantum number");
  if (n < 0 || n >= sol.n_states()) throw StateOutOfRange("state index out of range");
  return sol.parities()[n];
}

Eigen::VectorXd richardson_energies(const TrapSpec& trap, const Grid& grid,
                                    int n_states, const OneBodyConfig& cfg) {
  if (grid.n_points % 2 == 0)
    throw GridTooSmall("richardson_energies needs odd n_points");
  Grid coarse = grid;
  coarse.n_points = (grid.n_points - 1) / 2 + 1;
  const auto fine_sol = solve_one_body(trap, grid, n_states, cfg);
  const auto coarse_sol = solve_one_body(trap, coarse, n_states, cfg);
  return (4.0 * fine_sol.energies() - coarse_sol.energies()) / 3.0;
}

}  // namespace fewbody
