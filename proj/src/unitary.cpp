#include "fewbody/unitary.hpp"

#include <algorithm>
#include <cmath>

#include "fewbody/linalg.hpp"
#include "fewbody/spectra.hpp"

namespace fewbody {

namespace {

Eigen::MatrixXd eigen_projector(const Eigen::MatrixXd& op, double lambda,
                                const std::vector<double>& candidates) {
  const int n = static_cast<int>(op.rows());
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  for (double mu : candidates) {
    if (mu == lambda) continue;
    p = p * (op - mu * Eigen::MatrixXd::Identity(n, n)) / (lambda - mu);
  }
  return p;
}

Eigen::VectorXd extract_unit_vector(const Eigen::MatrixXd& projector) {
  for (int j = 0; j < projector.cols(); ++j) {
    Eigen::VectorXd v = projector.col(j);
    if (v.norm() > 1e-6) {
      v.normalize();
      for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-9) {
          if (v[i] < 0) v = -v;
          break;
        }
      }
      return v;
    }
  }
  throw Error("projector has empty range");
}

Tableau young_tab(std::vector<std::vector<int>> rows) {
  Tableau t;
  for (const auto& r : rows) t.shape.push_back(static_cast<int>(r.size()));
  t.rows = std::move(rows);
  t.flavor = TableauFlavor::young;
  return t;
}

}  // namespace

std::vector<Sector> all_sectors(int n) {
  if (n == 2) return {Sector{Perm::from_one_based({1, 2})}, Sector{Perm::from_one_based({2, 1})}};
  if (n == 3)
    return {Sector{Perm::from_one_based({1, 2, 3})}, Sector{Perm::from_one_based({2, 1, 3})},
            Sector{Perm::from_one_based({2, 3, 1})}, Sector{Perm::from_one_based({3, 2, 1})},
            Sector{Perm::from_one_based({3, 1, 2})}, Sector{Perm::from_one_based({1, 3, 2})}};
  throw UnsupportedN("sectors are provided for N = 2, 3");
}

int sector_index(const Sector& s) {
  const auto sectors = all_sectors(s.order.size());
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (sectors[i] == s) return static_cast<int>(i);
  throw Error("sector not in canonical list");
}

char sector_letter(const Sector& s) { return static_cast<char>('a' + sector_index(s)); }

Sector sector_action(SectorActionKind kind, const Perm& p, const Sector& s) {
  if (p.size() != s.order.size()) throw SizeMismatch("sector action: size mismatch");
  if (kind == SectorActionKind::particle)
    return Sector{perm_compose(s.order, perm_invert(p))};
  return Sector{perm_compose(p, s.order)};
}

Eigen::MatrixXd sector_action_matrix(SectorActionKind kind, const Perm& p, int n) {
  const auto sectors = all_sectors(n);
  const int d = static_cast<int>(sectors.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int s = 0; s < d; ++s)
    m(sector_index(sector_action(kind, p, sectors[s])), s) = 1.0;
  return m;
}

std::vector<Composition> unitary_spectrum(const Eigen::VectorXd& sigma1, int n,
                                          double e_max) {
  if (n != 2 && n != 3) throw UnsupportedN("unitary spectrum is provided for N = 2, 3");
  std::vector<Composition> out;
  for (auto& comp : enumerate_compositions(sigma1, n, e_max))
    if (comp.shape() == std::vector<int>(n, 1)) out.push_back(std::move(comp));
  return out;
}

SnippetBasis snippet_symmetrized_basis(const Composition& comp) {
  const int n = comp.n();
  if (n != 2 && n != 3) throw UnsupportedN("snippet bases are provided for N = 2, 3");
  if (comp.shape() != std::vector<int>(n, 1))
    throw RepeatedLabel("snippet basis needs strictly distinct labels");

  SnippetBasis basis;
  basis.sectors = all_sectors(n);
  const int d = static_cast<int>(basis.sectors.size());

  if (n == 2) {
    const Eigen::MatrixXd c12 =
        sector_action_matrix(SectorActionKind::particle, Perm::from_cycles(2, {{0, 1}}), 2);
    const Eigen::MatrixXd cab =
        sector_action_matrix(SectorActionKind::ordering, Perm::from_cycles(2, {{0, 1}}), 2);
    struct Target {
      double a, b;
      Tableau ord, part;
    };
    const std::vector<Target> targets{
        {1.0, 1.0, young_tab({{1, 2}}), young_tab({{1, 2}})},
        {-1.0, -1.0, young_tab({{1}, {2}}), young_tab({{1}, {2}})},
    };
    basis.coeffs.resize(d, d);
    for (std::size_t r = 0; r < targets.size(); ++r) {
      const Eigen::MatrixXd proj = eigen_projector(c12, targets[r].a, {1.0, -1.0}) *
                                   eigen_projector(cab, targets[r].b, {1.0, -1.0});
      basis.coeffs.row(r) = extract_unit_vector(proj).transpose();
      basis.labels.emplace_back(targets[r].ord, targets[r].part);
    }
    return basis;
  }

  // particle class operators and the ordering transposition U(AC)
  Eigen::MatrixXd c_all = Eigen::MatrixXd::Zero(d, d);
  for (const auto& pair : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
    c_all += sector_action_matrix(SectorActionKind::particle,
                                  Perm::from_cycles(3, {{pair.first, pair.second}}), 3);
  const Eigen::MatrixXd c12 =
      sector_action_matrix(SectorActionKind::particle, Perm::from_cycles(3, {{0, 1}}), 3);
  const Eigen::MatrixXd cac =
      sector_action_matrix(SectorActionKind::ordering, Perm::from_cycles(3, {{0, 2}}), 3);

  // rows in the printed label order; letters A,B,C are encoded as 1,2,3
  struct Target {
    double all, c12, cac;
    Tableau ord, part;
  };
  const Tableau ord_row = young_tab({{1, 2, 3}});
  const Tableau ord_acb = young_tab({{1, 3}, {2}});
  const Tableau ord_abc = young_tab({{1, 2}, {3}});
  const Tableau ord_col = young_tab({{1}, {2}, {3}});
  const Tableau y_row = young_tab({{1, 2, 3}});
  const Tableau y_123 = young_tab({{1, 2}, {3}});
  const Tableau y_132 = young_tab({{1, 3}, {2}});
  const Tableau y_col = young_tab({{1}, {2}, {3}});
  const std::vector<Target> targets{
      {3.0, 1.0, 1.0, ord_row, y_row},   {0.0, 1.0, 1.0, ord_acb, y_123},
      {0.0, -1.0, 1.0, ord_acb, y_132},  {0.0, 1.0, -1.0, ord_abc, y_123},
      {0.0, -1.0, -1.0, ord_abc, y_132}, {-3.0, -1.0, -1.0, ord_col, y_col},
  };

  basis.coeffs.resize(d, d);
  for (std::size_t r = 0; r < targets.size(); ++r) {
    const Eigen::MatrixXd proj = eigen_projector(c_all, targets[r].all, {3.0, 0.0, -3.0}) *
                                 eigen_projector(c12, targets[r].c12, {1.0, -1.0}) *
                                 eigen_projector(cac, targets[r].cac, {1.0, -1.0});
    basis.coeffs.row(r) = extract_unit_vector(proj).transpose();
    basis.labels.emplace_back(targets[r].ord, targets[r].part);
  }
  return basis;
}

TunnelingParams tunneling_params(const OneBodySolution& sol, const Composition& comp,
                                 double g) {
  const int n = comp.n();
  if (n != 2 && n != 3) throw UnsupportedN("tunneling amplitudes are provided for N = 2, 3");
  if (comp.shape() != std::vector<int>(n, 1))
    throw RepeatedLabel("tunneling needs strictly distinct labels");
  if (sol.derivatives().size() == 0)
    throw DerivativeUnavailable("solution carries no derivatives");
  for (int l : comp.labels())
    if (l >= sol.n_states()) throw StateOutOfRange("composition label beyond solved states");

  const int npts = sol.grid().n_points;
  const double h = sol.h();
  Eigen::VectorXd w = Eigen::VectorXd::Constant(npts, h);
  w[0] = w[npts - 1] = h / 2.0;

  TunnelingParams params(comp);
  params.g = g;

  if (n == 2) {
    const int a = comp.labels()[0], b = comp.labels()[1];
    const Eigen::VectorXd wronskian =
        sol.derivative(a).cwiseProduct(sol.wavefunction(b)) -
        sol.derivative(b).cwiseProduct(sol.wavefunction(a));
    params.gt = trapezoid(Eigen::VectorXd(wronskian.cwiseProduct(wronskian)), h);
    params.gu = params.gt;
    return params;
  }

  const int a = comp.labels()[0], b = comp.labels()[1], c = comp.labels()[2];
  const Eigen::MatrixXd& phi = sol.wavefunctions();
  const Eigen::MatrixXd& dphi = sol.derivatives();

  auto det3 = [](double a0, double a1, double a2, double b0, double b1, double b2,
                 double c0, double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
  };

  double t_sum = 0.0, u_sum = 0.0;
  for (int j = 0; j < npts; ++j) {       // y
    for (int i = 0; i < j; ++i) {        // x < y
      // edge-pair exchange: coincidence q1 = q2 = x, spectator at y
      const double dt = det3(dphi(i, a), phi(i, a), phi(j, a),
                             dphi(i, b), phi(i, b), phi(j, b),
                             dphi(i, c), phi(i, c), phi(j, c));
      // inner-pair exchange: spectator at x, coincidence q2 = q3 = y
      const double du = det3(phi(i, a), dphi(j, a), phi(j, a),
                             phi(i, b), dphi(j, b), phi(j, b),
                             phi(i, c), dphi(j, c), phi(j, c));
      t_sum += w[i] * w[j] * dt * dt;
      u_sum += w[i] * w[j] * du * du;
    }
  }
  params.gt = t_sum;
  params.gu = u_sum;
  return params;
}

Eigen::MatrixXd tunneling_operator_matrix(double t, double u, int n) {
  if (n == 2) {
    const Eigen::MatrixXd oab =
        sector_action_matrix(SectorActionKind::ordering, Perm::from_cycles(2, {{0, 1}}), 2);
    return -t * oab - t * Eigen::MatrixXd::Identity(2, 2);
  }
  if (n != 3) throw UnsupportedN("tunneling operator is provided for N = 2, 3");
  const Eigen::MatrixXd oab =
      sector_action_matrix(SectorActionKind::ordering, Perm::from_cycles(3, {{0, 1}}), 3);
  const Eigen::MatrixXd obc =
      sector_action_matrix(SectorActionKind::ordering, Perm::from_cycles(3, {{1, 2}}), 3);
  return -t * oab - u * obc - (t + u) * Eigen::MatrixXd::Identity(6, 6);
}

std::vector<SplitLevel> near_unitary_split(const TunnelingParams& params, bool symmetric,
                                           std::optional<int> parity_product) {
  const double t = params.t(), u = params.u();
  if (t < 0 || u < 0) throw NegativeAmplitude("tunneling amplitudes must be >= 0");
  const double base = params.comp.has_energy() ? params.comp.energy() : 0.0;
  const int n = params.comp.n();

  std::vector<SplitLevel> out;
  auto push = [&](double shift, std::vector<int> shape, int deg,
                  std::optional<int> parity, Eigen::VectorXd vec) {
    SplitLevel lev;
    lev.base_energy = base;
    lev.shift = shift;
    lev.degeneracy = deg;
    lev.irrep = {std::move(shape), parity};
    lev.eigvec = std::move(vec);
    lev.provenance = Provenance::near_unitary;
    out.push_back(lev);
  };

  const std::optional<int> p_sym =
      symmetric && parity_product ? std::optional<int>(-*parity_product) : std::nullopt;
  const std::optional<int> p_anti =
      symmetric && parity_product ? parity_product : std::nullopt;

  if (n == 2) {
    push(-2.0 * t, {2}, 1, p_sym, Eigen::VectorXd::Ones(1));
    push(0.0, {1, 1}, 1, p_anti, Eigen::VectorXd::Ones(1));
    return out;
  }

  const double radical = std::sqrt(t * t - t * u + u * u);
  // 2x2 tunneling block over the two ordering copies of [21], in the
  // (U(AC) = +1, U(AC) = -1) convention of the snippet basis.
  const SnippetBasis abstract = snippet_symmetrized_basis(Composition({0, 1, 2}));
  const Eigen::MatrixXd t6 =
      abstract.coeffs * tunneling_operator_matrix(t, u, 3) * abstract.coeffs.transpose();
  // rows 1 and 3 are the Young-(12/3) representatives of the two copies
  Eigen::Matrix2d block;
  block << t6(1, 1), t6(1, 3), t6(3, 1), t6(3, 3);

  auto vec21 = [&](double lambda) {
    Eigen::VectorXd v(2);
    if (std::abs(block(0, 1)) > 1e-14 * (std::abs(block(0, 0)) + std::abs(block(1, 1)) + 1e-300)) {
      v << block(0, 1), lambda - block(0, 0);
    } else {
      v << (std::abs(lambda - block(0, 0)) < std::abs(lambda - block(1, 1)) ? 1.0 : 0.0),
          (std::abs(lambda - block(0, 0)) < std::abs(lambda - block(1, 1)) ? 0.0 : 1.0);
    }
    v.normalize();
    for (int i = 0; i < 2; ++i) {
      if (std::abs(v[i]) > 1e-12) {
        if (v[i] < 0) v = -v;
        break;
      }
    }
    return v;
  };

  push(-2.0 * t - 2.0 * u, {3}, 1, p_sym, Eigen::VectorXd::Ones(1));
  push(-t - u - radical, {2, 1}, 2, p_anti, vec21(-t - u - radical));
  push(-t - u + radical, {2, 1}, 2, p_sym, vec21(-t - u + radical));
  push(0.0, {1, 1, 1}, 1, p_anti, Eigen::VectorXd::Ones(1));
  return out;
}

double slater_wavefunction(const OneBodySolution& sol, const Composition& comp,
                           const std::vector<double>& q) {
  const int n = comp.n();
  if (static_cast<int>(q.size()) != n) throw SizeMismatch("configuration point size != N");
  if (comp.shape() != std::vector<int>(n, 1))
    throw RepeatedLabel("slater wavefunction needs distinct labels");

  // linear interpolation of the sampled orbitals
  auto interp = [&](int state, double x) {
    const auto& grid = sol.grid();
    if (x <= grid.q_min || x >= grid.q_max) return 0.0;
    const double s = (x - grid.q_min) / grid.spacing();
    const int i = std::min(static_cast<int>(s), grid.n_points - 2);
    const double frac = s - i;
    return (1.0 - frac) * sol.wavefunctions()(i, state) +
           frac * sol.wavefunctions()(i + 1, state);
  };

  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = interp(comp.labels()[r], q[c]);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return m.determinant() / std::sqrt(fact);
}

}  // namespace fewbody
