#pragma once

#include <map>
#include <string>
#include <vector>

#include "fewbody/composition.hpp"

namespace fewbody {

enum class Statistics { distinguishable, boson, fermion };

std::string to_string(Statistics s);
Statistics statistics_from_string(const std::string& s);

// Content of one S_N irrep sector of the J-component spin space:
// `copies` equivalent irreps of dimension d([mu]).
struct SpinSector {
  int copies = 0;
  int irrep_dim = 0;
  int dim() const { return copies * irrep_dim; }
};

// Decomposition of the N-particle spin space C^(J^N) into S_N sectors.
// Total over all shapes satisfies sum copies*dim = J^N.
std::map<std::vector<int>, SpinSector> spin_sector_dims(int n, int j);

// S_N irrep content {[mu] -> multiplicity} of a composition space (Young's
// rule: Kostka numbers via Weyl tableau counting).
std::map<std::vector<int>, int> spatial_irrep_content(const Composition& comp);

// Number of physical states an energy level admits for the given exchange
// statistics and spin component count, via the S_N inner-product rule:
// [mu] x [mu'] contains [N] iff mu' = mu and [1^N] iff mu' = conj(mu).
long count_symmetrized_states(const Composition& comp, Statistics stats, int j);

// Same count for a single spatial irrep copy.
long count_for_irrep(const std::vector<int>& shape, Statistics stats, int j, int n);

}  // namespace fewbody
