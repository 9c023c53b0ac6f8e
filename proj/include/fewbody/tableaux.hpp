#pragma once

#include <string>
#include <vector>

#include "fewbody/composition.hpp"

namespace fewbody {

enum class TableauFlavor { young, weyl };

// A Ferrers shape filled with labels. Young tableaux hold particle numbers
// 1..N (strict increase right and down); Weyl tableaux hold state labels
// (non-decrease right, strict increase down).
struct Tableau {
  std::vector<int> shape;  // partition, descending
  std::vector<std::vector<int>> rows;
  TableauFlavor flavor = TableauFlavor::weyl;

  bool valid() const;
  // Compact text form, rows separated by "/": e.g. "01/2" or "12/3".
  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape == b.shape && a.rows == b.rows && a.flavor == b.flavor;
  }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    return a.rows < b.rows;
  }
};

// Complete, duplicate-free, lexicographically ordered enumeration of fillings
// of `shape` from an alphabet of (label, multiplicity) pairs. For Young
// tableaux the alphabet must be 1..N each once; for Weyl tableaux the content
// must use every label exactly multiplicity times.
std::vector<Tableau> enumerate_tableaux(const std::vector<int>& shape,
                                        const std::vector<std::pair<int, int>>& alphabet,
                                        TableauFlavor flavor);

// All Weyl tableaux of a composition across every shape of N, ordered by
// shape (most symmetric first) then lexicographically.
std::vector<Tableau> weyl_tableaux_for_composition(const Composition& comp);

// Standard Young tableaux of a shape (particle labels 1..N).
std::vector<Tableau> standard_young_tableaux(const std::vector<int>& shape);

// Number of semistandard fillings of `shape` with letters 1..j and free
// content; used for spin multiplicities.
int count_semistandard_tableaux(const std::vector<int>& shape, int j);

}  // namespace fewbody
