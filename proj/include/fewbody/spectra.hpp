#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fewbody/composition.hpp"
#include "fewbody/trap.hpp"

namespace fewbody {

enum class TrapSymmetry { asymmetric, symmetric, harmonic };

std::string to_string(TrapSymmetry s);

// All compositions of N states with total energy <= e_max, sorted by
// (energy, labels). Complete by construction for an ascending spectrum.
std::vector<Composition> enumerate_compositions(const Eigen::VectorXd& sigma1, int n,
                                                double e_max);

// Covering relation of the sigma1-independent partial order: A <= B iff the
// sorted index lists dominate pointwise (equivalently, prefix sums of the
// descending multiplicity tails), which holds iff E_A <= E_B for every
// strictly increasing one-particle spectrum.
std::vector<std::pair<int, int>> partial_order_edges(const std::vector<Composition>& comps);
bool abstract_precedes(const Composition& a, const Composition& b);  // non-strict

// Classification of a non-interacting level. Irrep name lists carry
// (name, multiplicity) pairs and render like "A1g + Eg" / "[3]^- + 2[21]^-".
struct LevelClassification {
  std::string k0_class;
  std::vector<std::pair<std::string, int>> c0_irreps;
  std::vector<std::pair<std::string, int>> k_irreps;

  std::string c0_string() const;
  std::string k_string() const;
};

int point_group_irrep_dim(const std::string& name);  // D4 / O_h / S_N labels

// Table-driven classification: the complete lookup tables for symmetric
// traps are embedded as literal data; asymmetric traps fall back to the
// S_N-only decomposition. `parities` maps state index -> +-1 and is required
// unless the trap symmetry is `asymmetric`.
LevelClassification classify_level(const Composition& comp, const std::vector<int>& parities,
                                   TrapSymmetry sym);

// Element-wise shift by <0, 1, ..., N-1>: maps each level of the bosonic
// spectrum to the unitary-limit (fermionic) level with the same ordering.
Composition fermi_bose_map(const Composition& comp);

// Harmonic emergent degeneracy count at total excitation X:
// N=2 -> X+1, N=3 -> (X+1)(X+2)/2.
long emergent_degeneracy_check(const TrapSpec& trap, long x, int n);

}  // namespace fewbody
