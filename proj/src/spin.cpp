#include "fewbody/spin.hpp"

#include <cmath>

#include "fewbody/tableaux.hpp"

namespace fewbody {

std::string to_string(Statistics s) {
  switch (s) {
    case Statistics::distinguishable: return "distinguishable";
    case Statistics::boson: return "boson";
    case Statistics::fermion: return "fermion";
  }
  throw Error("unknown statistics");
}

Statistics statistics_from_string(const std::string& s) {
  if (s == "distinguishable") return Statistics::distinguishable;
  if (s == "boson") return Statistics::boson;
  if (s == "fermion") return Statistics::fermion;
  throw ConfigInvalid("unknown statistics: " + s);
}

std::map<std::vector<int>, SpinSector> spin_sector_dims(int n, int j) {
  if (n != 2 && n != 3) throw UnsupportedN("spin sectors are provided for N = 2, 3");
  if (j < 1) throw ConfigInvalid("spin component count must be >= 1");
  std::map<std::vector<int>, SpinSector> out;
  long total = 0;
  for (const auto& shape : partitions_of(n)) {
    SpinSector sec;
    sec.copies = count_semistandard_tableaux(shape, j);
    sec.irrep_dim = irrep_dim(shape);
    out[shape] = sec;
    total += sec.dim();
  }
  long expect = 1;
  for (int i = 0; i < n; ++i) expect *= j;
  if (total != expect) throw Error("spin sector dimensions do not sum to J^N");
  return out;
}

std::map<std::vector<int>, int> spatial_irrep_content(const Composition& comp) {
  // multiplicity of [mu] in the permutation module of shape [nu] equals the
  // number of Weyl tableaux of shape [mu] with the composition's content
  std::map<std::vector<int>, int> out;
  for (const auto& t : weyl_tableaux_for_composition(comp)) ++out[t.shape];
  return out;
}

long count_for_irrep(const std::vector<int>& shape, Statistics stats, int j, int n) {
  switch (stats) {
    case Statistics::distinguishable: {
      long spin = 1;
      for (int i = 0; i < n; ++i) spin *= j;
      return irrep_dim(shape) * spin;
    }
    case Statistics::boson:
      return count_semistandard_tableaux(shape, j);
    case Statistics::fermion:
      return count_semistandard_tableaux(conjugate_partition(shape), j);
  }
  throw Error("unknown statistics");
}

long count_symmetrized_states(const Composition& comp, Statistics stats, int j) {
  if (comp.n() != 2 && comp.n() != 3) throw UnsupportedN("counting is provided for N = 2, 3");
  if (stats == Statistics::distinguishable) {
    long spin = 1;
    for (int i = 0; i < comp.n(); ++i) spin *= j;
    return comp.degeneracy() * spin;
  }
  long total = 0;
  for (const auto& [shape, mult] : spatial_irrep_content(comp))
    total += mult * count_for_irrep(shape, stats, j, comp.n());
  return total;
}

}  // namespace fewbody
