#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fewbody/onebody.hpp"

namespace fewbody {

enum class InteractionKind { contact, gaussian, sampled_kernel };

std::string to_string(InteractionKind k);

// A Galilean-invariant two-body interaction: the kernel depends only on the
// separation |q_i - q_j|. The gaussian kind is a regularized-contact test
// fixture with integrated strength g_eff = strength * range * sqrt(2 pi).
struct InteractionSpec {
  InteractionKind kind = InteractionKind::contact;
  double g = 0.0;                    // contact
  double strength = 0.0;             // gaussian
  double range = 0.0;                // gaussian
  std::vector<double> kernel_sep;    // sampled_kernel, ascending separations >= 0
  std::vector<double> kernel_val;

  static InteractionSpec Contact(double g);
  static InteractionSpec Gaussian(double strength, double range);
  static InteractionSpec SampledKernel(std::vector<double> sep, std::vector<double> val);

  void validate() const;
  double kernel(double separation) const;  // non-contact kinds only
};

enum class TableKind { general, contact };

// Cached two-body matrix elements. value(a,b,c,d) returns <ab|V|cd>; the
// canonical storage key makes the symmetry group of each kind structural:
// contact keys are the sorted 4-multiset, general keys the unordered pair of
// unordered transition pairs {a,c},{b,d}.
class TwoBodyTable {
 public:
  TwoBodyTable(TableKind kind, std::set<int> states);

  TableKind kind() const { return kind_; }
  const std::set<int>& states() const { return states_; }

  double value(int a, int b, int c, int d) const;
  bool contains(int a, int b, int c, int d) const;
  void set(int a, int b, int c, int d, double v);  // <ab|V|cd> semantics

  static std::uint64_t contact_key(int a, int b, int c, int d);
  static std::uint64_t general_key(int a, int b, int c, int d);

  // canonical (sorted) key -> value view for serialization
  const std::map<std::uint64_t, double>& storage() const { return storage_; }

 private:
  std::uint64_t key(int a, int b, int c, int d) const;

  TableKind kind_;
  std::set<int> states_;
  std::map<std::uint64_t, double> storage_;
};

// g * integral of phi_a phi_b phi_c phi_d over the solver grid, for every
// 4-multiset drawn from `states`.
TwoBodyTable contact_elements(const OneBodySolution& sol, const std::set<int>& states,
                              double g);

// Double quadrature of phi_a(q1) phi_b(q2) K(|q1-q2|) phi_c(q1) phi_d(q2) for
// gaussian or sampled kernels.
TwoBodyTable general_elements(const OneBodySolution& sol, const InteractionSpec& spec,
                              const std::set<int>& states);

}  // namespace fewbody
