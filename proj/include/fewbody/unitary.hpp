#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "fewbody/onebody.hpp"
#include "fewbody/perm.hpp"
#include "fewbody/perturbation.hpp"
#include "fewbody/tableaux.hpp"

namespace fewbody {

// One configuration-space sector q_{s_1} < q_{s_2} < ... < q_{s_N}.
struct Sector {
  Perm order;

  friend bool operator==(const Sector& a, const Sector& b) { return a.order == b.order; }
};

// Canonical sector order (N = 3 follows the a..f letters of the sector
// table: {123}, {213}, {231}, {321}, {312}, {132}).
std::vector<Sector> all_sectors(int n);
int sector_index(const Sector& s);
char sector_letter(const Sector& s);  // 'a'..'f' for N = 3

enum class SectorActionKind { particle, ordering };

// Particle permutations act as Q_s -> Q_{s p^-1}; ordering permutations act
// naturally as Q_s -> Q_{o s}. The two actions commute.
Sector sector_action(SectorActionKind kind, const Perm& p, const Sector& s);
Eigen::MatrixXd sector_action_matrix(SectorActionKind kind, const Perm& p, int n);

// Spectrum at the unitary limit: compositions of strictly distinct labels,
// each N!-fold degenerate. Identical to the image of the Fermi-Bose map on
// the full non-interacting enumeration at matching cutoffs.
std::vector<Composition> unitary_spectrum(const Eigen::VectorXd& sigma1, int n, double e_max);

// Orthogonal 6x6 basis over snippet sectors diagonalizing the particle class
// operators and the ordering transposition U(AC). Row labels pair an
// ordering tableau (letters A < B < C) with a particle Young tableau.
struct SnippetBasis {
  std::vector<Sector> sectors;
  Eigen::MatrixXd coeffs;  // rows x sectors
  std::vector<std::pair<Tableau, Tableau>> labels;  // (ordering, particle)
};

SnippetBasis snippet_symmetrized_basis(const Composition& comp);

// Tunneling amplitudes stored as g-independent products g*t (and g*u for
// N = 3); callers supply g at presentation time.
struct TunnelingParams {
  double gt = 0.0;
  double gu = 0.0;
  double g = 1.0;
  Composition comp;

  explicit TunnelingParams(Composition c) : comp(std::move(c)) {}
  double t() const { return gt / g; }
  double u() const { return gu / g; }
};

// Quadrature of the squared normal derivative of the Slater-determinant
// wavefunction on the coincidence manifold, restricted to the stated
// regions (N = 2 uses the single-amplitude reduction).
TunnelingParams tunneling_params(const OneBodySolution& sol, const Composition& comp,
                                 double g);

// Closed-form near-unitary splitting. For N = 3 the shifts are
// {-2t-2u, -t-u -+ sqrt(t^2 - tu + u^2), 0} with degeneracies 1, 2, 2, 1;
// with the symmetric flag (t = u) parity labels attach via the parity
// product of the source composition.
std::vector<SplitLevel> near_unitary_split(const TunnelingParams& params, bool symmetric,
                                           std::optional<int> parity_product = {});

// -t O(AB) - u O(BC) - (t+u) I over the snippet sectors (brute-force oracle
// companion for the closed forms).
Eigen::MatrixXd tunneling_operator_matrix(double t, double u, int n);

// Antisymmetric (Slater) wavefunction value at a configuration point.
double slater_wavefunction(const OneBodySolution& sol, const Composition& comp,
                           const std::vector<double>& q);

}  // namespace fewbody
