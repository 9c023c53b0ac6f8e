#include "fewbody/symmetrize.hpp"

#include <algorithm>
#include <map>

namespace fewbody {

namespace {

int sequence_index(const std::vector<std::vector<int>>& seqs, const std::vector<int>& s) {
  const auto it = std::lower_bound(seqs.begin(), seqs.end(), s);
  if (it == seqs.end() || *it != s) throw Error("sequence not in composition space");
  return static_cast<int>(it - seqs.begin());
}

// Projector onto the lambda eigenspace of a symmetric matrix with known
// integer spectrum candidates.
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

Tableau row_tableau(const std::vector<int>& labels) {
  Tableau t;
  t.shape = {static_cast<int>(labels.size())};
  t.rows = {labels};
  t.flavor = TableauFlavor::weyl;
  return t;
}

Tableau column_tableau(const std::vector<int>& labels) {
  Tableau t;
  t.shape.assign(labels.size(), 1);
  for (int l : labels) t.rows.push_back({l});
  t.flavor = TableauFlavor::weyl;
  return t;
}

Tableau young_row(int n) {
  Tableau t;
  t.shape = {n};
  t.rows.resize(1);
  for (int i = 1; i <= n; ++i) t.rows[0].push_back(i);
  t.flavor = TableauFlavor::young;
  return t;
}

Tableau young_column(int n) {
  Tableau t;
  t.shape.assign(n, 1);
  for (int i = 1; i <= n; ++i) t.rows.push_back({i});
  t.flavor = TableauFlavor::young;
  return t;
}

}  // namespace

SymmetrizedBasis::SymmetrizedBasis(Composition comp,
                                   std::vector<std::vector<int>> sequences,
                                   Eigen::MatrixXd coeffs, std::vector<SymmetrizedRow> rows)
    : comp_(std::move(comp)),
      sequences_(std::move(sequences)),
      coeffs_(std::move(coeffs)),
      rows_(std::move(rows)) {}

Eigen::MatrixXd particle_perm_matrix(const Perm& p, const Composition& comp) {
  if (p.size() != comp.n()) throw SizeMismatch("permutation size != N");
  const auto seqs = comp.sequences();
  const int d = static_cast<int>(seqs.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int s = 0; s < d; ++s)
    m(sequence_index(seqs, act_particle_basis(p, seqs[s])), s) = 1.0;
  return m;
}

Eigen::MatrixXd state_perm_matrix(const StatePerm& sp, const Composition& comp) {
  const auto seqs = comp.sequences();
  const int d = static_cast<int>(seqs.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int s = 0; s < d; ++s)
    m(sequence_index(seqs, act_state_perm(sp, seqs[s])), s) = 1.0;
  return m;
}

Eigen::MatrixXd class_operator_matrix(ClassOperatorKind kind, const Composition& comp,
                                      std::optional<std::pair<int, int>> state_pair) {
  const int n = comp.n();
  if (n > 3) throw UnsupportedN("class operators are provided for N <= 3");
  switch (kind) {
    case ClassOperatorKind::all_two_cycles: {
      const auto seqs = comp.sequences();
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(seqs.size(), seqs.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          sum += particle_perm_matrix(Perm::from_cycles(n, {{i, j}}), comp);
      return sum;
    }
    case ClassOperatorKind::transposition_12:
      if (n < 2) throw UnsupportedN("U(12) needs N >= 2");
      return particle_perm_matrix(Perm::from_cycles(n, {{0, 1}}), comp);
    case ClassOperatorKind::state_pair: {
      if (!state_pair) throw Error("state_pair operator needs a label pair");
      return state_perm_matrix(StatePerm::transposition(state_pair->first, state_pair->second),
                               comp);
    }
  }
  throw Error("unknown class operator");
}

SymmetrizedBasis symmetrized_basis(const Composition& comp) {
  const int n = comp.n();
  if (n != 2 && n != 3) throw UnsupportedN("symmetrized bases are built for N = 2, 3");

  const auto seqs = comp.sequences();
  const int dim = static_cast<int>(seqs.size());
  const auto distinct = comp.distinct_labels();
  const auto shape = comp.shape();

  const Eigen::MatrixXd c_all = class_operator_matrix(ClassOperatorKind::all_two_cycles, comp);
  const Eigen::MatrixXd c_12 =
      n >= 2 ? class_operator_matrix(ClassOperatorKind::transposition_12, comp)
             : Eigen::MatrixXd::Identity(dim, dim);
  const bool use_state_pair = (n == 3 && distinct.size() == 3);
  const Eigen::MatrixXd c_sp =
      use_state_pair ? class_operator_matrix(ClassOperatorKind::state_pair, comp,
                                             std::make_pair(distinct[0], distinct[1]))
                     : Eigen::MatrixXd::Identity(dim, dim);

  const std::vector<double> spec_all =
      (n == 2) ? std::vector<double>{1.0, -1.0} : std::vector<double>{3.0, 0.0, -3.0};
  const std::vector<double> spec_pm{1.0, -1.0};

  // target rows: (C2_all, C2_12, C2_state) eigenvalues plus tableau labels
  struct Target {
    double c_all, c_12, c_sp;
    SymmetrizedRow row;
  };
  std::vector<Target> targets;

  const auto weyl21 = (n == 3) ? enumerate_tableaux(
                                     {2, 1},
                                     [&] {
                                       std::vector<std::pair<int, int>> a;
                                       const auto mults = comp.multiplicities();
                                       for (std::size_t i = 0; i < distinct.size(); ++i)
                                         a.emplace_back(distinct[i], mults[i]);
                                       return a;
                                     }(),
                                     TableauFlavor::weyl)
                               : std::vector<Tableau>{};
  const auto young21 = (n == 3) ? standard_young_tableaux({2, 1}) : std::vector<Tableau>{};

  if (n == 2) {
    targets.push_back({1.0, 1.0, 1.0,
                       {row_tableau(comp.labels()), young_row(2), std::vector<int>{2}}});
    if (shape == std::vector<int>{1, 1})
      targets.push_back({-1.0, -1.0, 1.0,
                         {column_tableau(comp.labels()), young_column(2),
                          std::vector<int>{1, 1}}});
  } else {
    // totally symmetric row exists for every composition
    targets.push_back({3.0, 1.0, 1.0,
                       {row_tableau(comp.labels()), young_row(3), std::vector<int>{3}}});
    if (shape == std::vector<int>{2, 1}) {
      targets.push_back({0.0, 1.0, 1.0, {weyl21[0], young21[0], std::vector<int>{2, 1}}});
      targets.push_back({0.0, -1.0, 1.0, {weyl21[0], young21[1], std::vector<int>{2, 1}}});
    } else if (shape == std::vector<int>{1, 1, 1}) {
      // U(alpha beta) = +1 selects the Weyl tableau with the two lowest labels
      // in the first row; the lexicographic enumeration puts it first.
      targets.push_back({0.0, 1.0, 1.0, {weyl21[0], young21[0], std::vector<int>{2, 1}}});
      targets.push_back({0.0, -1.0, 1.0, {weyl21[0], young21[1], std::vector<int>{2, 1}}});
      targets.push_back({0.0, 1.0, -1.0, {weyl21[1], young21[0], std::vector<int>{2, 1}}});
      targets.push_back({0.0, -1.0, -1.0, {weyl21[1], young21[1], std::vector<int>{2, 1}}});
      targets.push_back({-3.0, -1.0, -1.0,
                         {column_tableau(comp.labels()), young_column(3),
                          std::vector<int>{1, 1, 1}}});
    }
  }

  Eigen::MatrixXd coeffs(targets.size(), dim);
  std::vector<SymmetrizedRow> rows;
  for (std::size_t r = 0; r < targets.size(); ++r) {
    Eigen::MatrixXd proj = eigen_projector(c_all, targets[r].c_all, spec_all) *
                           eigen_projector(c_12, targets[r].c_12, spec_pm);
    if (use_state_pair) proj = proj * eigen_projector(c_sp, targets[r].c_sp, spec_pm);
    coeffs.row(r) = extract_unit_vector(proj).transpose();
    rows.push_back(targets[r].row);
  }

  return SymmetrizedBasis(comp, seqs, std::move(coeffs), std::move(rows));
}

}  // namespace fewbody
