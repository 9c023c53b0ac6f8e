#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "fewbody/composition.hpp"
#include "fewbody/perm.hpp"
#include "fewbody/tableaux.hpp"

namespace fewbody {

// One row of a symmetrized basis: |Weyl tableau, Young tableau> with the
// S_N irrep given by the common shape.
struct SymmetrizedRow {
  Tableau weyl;
  Tableau young;
  std::vector<int> irrep;  // shape
};

// Orthogonal change of basis from the particle-sequence basis of a
// composition space to the simultaneous eigenbasis of the class operators
// {C2 over all particles, C2(12), and for three distinct labels the state
// transposition of the two lowest labels}. Row phases are fixed by making
// the first nonzero coefficient positive, which reproduces the printed
// coefficient tables for N = 2, 3.
class SymmetrizedBasis {
 public:
  SymmetrizedBasis(Composition comp, std::vector<std::vector<int>> sequences,
                   Eigen::MatrixXd coeffs, std::vector<SymmetrizedRow> rows);

  const Composition& composition() const { return comp_; }
  const std::vector<std::vector<int>>& sequences() const { return sequences_; }
  const Eigen::MatrixXd& coeffs() const { return coeffs_; }  // rows x sequences
  const std::vector<SymmetrizedRow>& rows() const { return rows_; }
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  Composition comp_;
  std::vector<std::vector<int>> sequences_;
  Eigen::MatrixXd coeffs_;
  std::vector<SymmetrizedRow> rows_;
};

SymmetrizedBasis symmetrized_basis(const Composition& comp);

// Matrices over the canonical particle-sequence basis of the composition.
Eigen::MatrixXd particle_perm_matrix(const Perm& p, const Composition& comp);
Eigen::MatrixXd state_perm_matrix(const StatePerm& sp, const Composition& comp);

enum class ClassOperatorKind {
  all_two_cycles,    // C2 over all particle pairs
  transposition_12,  // U(12)
  state_pair         // U(xy) on state labels
};

Eigen::MatrixXd class_operator_matrix(ClassOperatorKind kind, const Composition& comp,
                                      std::optional<std::pair<int, int>> state_pair = {});

}  // namespace fewbody
