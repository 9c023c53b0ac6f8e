#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "fewbody/symmetrize.hpp"
#include "fewbody/twobody.hpp"

namespace fewbody {

enum class Provenance { weak, ed, unitary, near_unitary };

std::string to_string(Provenance p);

struct IrrepLabel {
  std::vector<int> shape;
  std::optional<int> parity;  // +-1 when the trap is symmetric

  std::string to_string() const;  // "[21]^-" or "[21]"
  int dim() const { return irrep_dim(shape); }
  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.shape == b.shape && a.parity == b.parity;
  }
};

// One split energy level: unperturbed energy, first-order (or exact) shift,
// S_N irrep with optional parity, and how it was obtained.
struct SplitLevel {
  double base_energy = 0.0;
  double shift = 0.0;
  int degeneracy = 1;
  IrrepLabel irrep;
  Eigen::VectorXd eigvec;  // coefficients over the symmetrized block basis
  Provenance provenance = Provenance::weak;

  double total_energy() const { return base_energy + shift; }
};

// First-order splitting of one two-particle composition:
// |a b| -> [2]: v_{|a^2||b^2|} + v_{|ab|^2}, [1^2]: difference;
// |a^2| -> single level with shift v_{|a^2|^2}.
std::vector<SplitLevel> weak_split_2(const Composition& comp, const TwoBodyTable& table);

// V^3 restricted to one composition space, conjugated into the symmetrized
// basis. Block-diagonal across irreps and Young tableau index.
Eigen::MatrixXd v3_block(const Composition& comp, const TwoBodyTable& table,
                         const SymmetrizedBasis& basis);

// Closed-form first-order splitting of one three-particle composition,
// including the quadratic-radical eigenvalues of the [21] pair for three
// distinct labels. Eigvecs are reported over the two [21] Weyl copies with
// the first nonzero component positive.
std::vector<SplitLevel> weak_split_3(const Composition& comp, const TwoBodyTable& table);

// Driver over many compositions: closed forms for isolated compositions and
// degenerate-perturbation blocks (H0 + V diagonalized exactly) for clusters
// of compositions closer in energy than merge_tol. Parities, when supplied,
// attach parity labels.
std::vector<SplitLevel> weak_split(const std::vector<Composition>& comps,
                                   const TwoBodyTable& table,
                                   const std::vector<int>& parities = {},
                                   double merge_tol = 1e-8);

struct EDConfig {
  double e_max = 0.0;
  InteractionSpec interaction;
  std::optional<IrrepLabel> sector;
  int young_rep = 0;        // which [21] Young tableau represents the irrep
  std::optional<int> lowest_k;  // restrict output to the lowest k levels
  double degeneracy_merge_tol = 1e-8;  // kept for parity with the weak driver
  int max_dense_dim = 2000;
};

// Exact diagonalization of H0 + V^N in the symmetrized, sector-filtered,
// truncated basis. One Young-tableau representative is kept per [21] irrep;
// reported degeneracies are the irrep dimensions.
std::vector<SplitLevel> exact_diagonalize(const OneBodySolution& sol, int n,
                                          const EDConfig& cfg);

// <seq|V^N|seq'> assembled from two-body elements (N = 2, 3).
double sequence_interaction_element(const std::vector<int>& bra,
                                    const std::vector<int>& ket,
                                    const TwoBodyTable& table);

}  // namespace fewbody
