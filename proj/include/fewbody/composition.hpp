#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fewbody/errors.hpp"

namespace fewbody {

// A multiset of one-particle state indices, e.g. |0,0,2|. Carries its shape
// (the partition of multiplicities), degeneracy (count of distinct
// orderings), and, when built from a spectrum, its energy.
class Composition {
 public:
  explicit Composition(std::vector<int> labels);
  Composition(std::vector<int> labels, const Eigen::VectorXd& sigma1);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<int> distinct_labels() const;
  std::vector<int> multiplicities() const;  // aligned with distinct_labels

  // Partition of N recording the multiplicity pattern, descending.
  std::vector<int> shape() const;

  // N! / prod(multiplicity!)
  long degeneracy() const;

  bool has_energy() const { return has_energy_; }
  double energy() const;

  // All distinct orderings of the labels, lexicographically sorted. This is
  // the canonical particle-sequence basis order used everywhere.
  std::vector<std::vector<int>> sequences() const;

  std::string to_string() const;  // "(0 0 2)"
  std::string csv_field() const;  // "0 0 2"

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.labels_ < b.labels_;
  }

 private:
  std::vector<int> labels_;  // sorted ascending
  double energy_ = 0.0;
  bool has_energy_ = false;
};

// Partition helpers shared by the symmetry modules.
std::string partition_to_string(const std::vector<int>& shape);  // "[21]", "[1^3]"
std::vector<int> partition_from_string(const std::string& s);
std::vector<int> conjugate_partition(const std::vector<int>& shape);
int irrep_dim(const std::vector<int>& shape);  // hook length formula
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace fewbody
