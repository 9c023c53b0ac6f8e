#include "fewbody/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fewbody/linalg.hpp"
#include "fewbody/spectra.hpp"

namespace fewbody {

namespace {

double direct_element(const TwoBodyTable& t, int x, int y) { return t.value(x, y, x, y); }
double exchange_element(const TwoBodyTable& t, int x, int y) { return t.value(x, y, y, x); }

int composition_parity(const Composition& comp, const std::vector<int>& parities) {
  int p = 1;
  for (int l : comp.labels()) {
    if (l >= static_cast<int>(parities.size()))
      throw StateOutOfRange("parity missing for state " + std::to_string(l));
    p *= parities[l];
  }
  return p;
}

void fix_phase(Eigen::VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::weak: return "weak";
    case Provenance::ed: return "ed";
    case Provenance::unitary: return "unitary";
    case Provenance::near_unitary: return "near_unitary";
  }
  throw Error("unknown provenance");
}

std::string IrrepLabel::to_string() const {
  std::string s = partition_to_string(shape);
  if (parity) s += (*parity > 0) ? "^+" : "^-";
  return s;
}

double sequence_interaction_element(const std::vector<int>& bra,
                                    const std::vector<int>& ket,
                                    const TwoBodyTable& table) {
  if (bra.size() != ket.size()) throw SizeMismatch("bra/ket length mismatch");
  if (bra.size() == 2) return table.value(bra[0], bra[1], ket[0], ket[1]);
  if (bra.size() == 3) {
    double v = 0.0;
    if (bra[2] == ket[2]) v += table.value(bra[0], bra[1], ket[0], ket[1]);
    if (bra[0] == ket[0]) v += table.value(bra[1], bra[2], ket[1], ket[2]);
    if (bra[1] == ket[1]) v += table.value(bra[0], bra[2], ket[0], ket[2]);
    return v;
  }
  throw UnsupportedN("interaction elements are assembled for N = 2, 3");
}

std::vector<SplitLevel> weak_split_2(const Composition& comp, const TwoBodyTable& table) {
  if (comp.n() != 2) throw WrongN("weak_split_2 needs a two-particle composition");
  const double base = comp.has_energy() ? comp.energy() : 0.0;
  const auto& l = comp.labels();
  std::vector<SplitLevel> out;
  if (l[0] == l[1]) {
    SplitLevel lev;
    lev.base_energy = base;
    lev.shift = direct_element(table, l[0], l[0]);
    lev.degeneracy = 1;
    lev.irrep = {{2}, {}};
    lev.eigvec = Eigen::VectorXd::Ones(1);
    out.push_back(lev);
    return out;
  }
  const double dir = direct_element(table, l[0], l[1]);
  const double exch = exchange_element(table, l[0], l[1]);
  SplitLevel sym;
  sym.base_energy = base;
  sym.shift = dir + exch;
  sym.degeneracy = 1;
  sym.irrep = {{2}, {}};
  sym.eigvec = Eigen::VectorXd::Ones(1);
  SplitLevel anti = sym;
  anti.shift = dir - exch;
  anti.irrep = {{1, 1}, {}};
  out.push_back(sym);
  out.push_back(anti);
  return out;
}

Eigen::MatrixXd v3_block(const Composition& comp, const TwoBodyTable& table,
                         const SymmetrizedBasis& basis) {
  if (comp.n() != 3) throw WrongN("v3_block needs a three-particle composition");
  const auto& seqs = basis.sequences();
  const int d = static_cast<int>(seqs.size());
  Eigen::MatrixXd v(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      v(i, j) = sequence_interaction_element(seqs[i], seqs[j], table);
      v(j, i) = v(i, j);
    }
  return basis.coeffs() * v * basis.coeffs().transpose();
}

std::vector<SplitLevel> weak_split_3(const Composition& comp, const TwoBodyTable& table) {
  if (comp.n() != 3) throw WrongN("weak_split_3 needs a three-particle composition");
  const double base = comp.has_energy() ? comp.energy() : 0.0;
  const auto distinct = comp.distinct_labels();
  const auto shape = comp.shape();
  std::vector<SplitLevel> out;

  auto push = [&](double shift, std::vector<int> irrep, Eigen::VectorXd vec) {
    SplitLevel lev;
    lev.base_energy = base;
    lev.shift = shift;
    lev.irrep = {std::move(irrep), {}};
    lev.degeneracy = lev.irrep.dim();
    lev.eigvec = std::move(vec);
    out.push_back(lev);
  };

  if (shape == std::vector<int>{3}) {
    push(3.0 * direct_element(table, distinct[0], distinct[0]), {3}, Eigen::VectorXd::Ones(1));
    return out;
  }

  if (shape == std::vector<int>{2, 1}) {
    const auto mults = comp.multiplicities();
    const int doubled = mults[0] == 2 ? distinct[0] : distinct[1];
    const int single = mults[0] == 2 ? distinct[1] : distinct[0];
    const double vdd = direct_element(table, doubled, doubled);
    const double dir = direct_element(table, doubled, single);
    const double exch = exchange_element(table, doubled, single);
    push(vdd + 2.0 * dir + 2.0 * exch, {3}, Eigen::VectorXd::Ones(1));
    push(vdd + 2.0 * dir - exch, {2, 1}, Eigen::VectorXd::Ones(1));
    return out;
  }

  // three distinct labels a < b < c
  const int a = distinct[0], b = distinct[1], c = distinct[2];
  const double d_sum = direct_element(table, a, b) + direct_element(table, b, c) +
                       direct_element(table, a, c);
  const double e_ab = exchange_element(table, a, b);
  const double e_bc = exchange_element(table, b, c);
  const double e_ac = exchange_element(table, a, c);
  const double e_sum = e_ab + e_bc + e_ac;
  const double radical = std::sqrt(e_ab * e_ab + e_bc * e_bc + e_ac * e_ac - e_ab * e_bc -
                                   e_bc * e_ac - e_ab * e_ac);

  // reduced 2x2 over the two [21] Weyl copies (|ab,c| then |ac,b|)
  const double m11 = d_sum + e_ab - 0.5 * e_bc - 0.5 * e_ac;
  const double m22 = d_sum - e_ab + 0.5 * e_bc + 0.5 * e_ac;
  const double m12 = 0.5 * std::sqrt(3.0) * (e_ac - e_bc);

  auto eigvec_for = [&](double lambda) {
    Eigen::VectorXd v(2);
    if (std::abs(m12) > 1e-14 * (std::abs(m11) + std::abs(m22) + 1e-300)) {
      v << m12, lambda - m11;
    } else {
      v << (std::abs(lambda - m11) < std::abs(lambda - m22) ? 1.0 : 0.0),
          (std::abs(lambda - m11) < std::abs(lambda - m22) ? 0.0 : 1.0);
    }
    v.normalize();
    fix_phase(v);
    return v;
  };

  push(d_sum + e_sum, {3}, Eigen::VectorXd::Ones(1));
  push(d_sum + radical, {2, 1}, eigvec_for(d_sum + radical));
  push(d_sum - radical, {2, 1}, eigvec_for(d_sum - radical));
  push(d_sum - e_sum, {1, 1, 1}, Eigen::VectorXd::Ones(1));
  return out;
}

std::vector<SplitLevel> weak_split(const std::vector<Composition>& comps,
                                   const TwoBodyTable& table,
                                   const std::vector<int>& parities, double merge_tol) {
  std::vector<Composition> sorted = comps;
  std::sort(sorted.begin(), sorted.end(), [](const Composition& x, const Composition& y) {
    if (x.energy() != y.energy()) return x.energy() < y.energy();
    return x < y;
  });

  std::vector<SplitLevel> out;
  const bool labeled = !parities.empty();

  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].energy() - sorted[j - 1].energy() <= merge_tol) ++j;

    if (j == i + 1) {
      const auto& comp = sorted[i];
      auto levels = comp.n() == 2 ? weak_split_2(comp, table) : weak_split_3(comp, table);
      if (labeled)
        for (auto& lev : levels) lev.irrep.parity = composition_parity(comp, parities);
      out.insert(out.end(), levels.begin(), levels.end());
      i = j;
      continue;
    }

    // Accidentally degenerate cluster: diagonalize H0 + V per
    // (irrep, Young representative, parity) block with exact H0 entries.
    struct Row {
      std::size_t comp_idx;
      int row_idx;
    };
    std::map<std::string, std::vector<Row>> blocks;
    std::vector<SymmetrizedBasis> bases;
    for (std::size_t k = i; k < j; ++k) bases.push_back(symmetrized_basis(sorted[k]));
    const auto sy21 = standard_young_tableaux({2, 1});
    for (std::size_t k = i; k < j; ++k) {
      const auto& rows = bases[k - i].rows();
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r].irrep == std::vector<int>{2, 1} && sorted[k].n() == 3 &&
            !(rows[r].young == sy21[0]))
          continue;  // one Young representative per [21] copy
        std::string key = partition_to_string(rows[r].irrep);
        if (labeled) key += composition_parity(sorted[k], parities) > 0 ? "+" : "-";
        blocks[key].push_back({k, r});
      }
    }

    for (const auto& [key, rows] : blocks) {
      (void)key;
      const int dim = static_cast<int>(rows.size());
      Eigen::MatrixXd h(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int s = r; s < dim; ++s) {
          const auto& ba = bases[rows[r].comp_idx - i];
          const auto& bb = bases[rows[s].comp_idx - i];
          double v = 0.0;
          for (std::size_t p = 0; p < ba.sequences().size(); ++p)
            for (std::size_t q = 0; q < bb.sequences().size(); ++q) {
              const double w = ba.coeffs()(rows[r].row_idx, p) * bb.coeffs()(rows[s].row_idx, q);
              if (w != 0.0)
                v += w * sequence_interaction_element(ba.sequences()[p], bb.sequences()[q], table);
            }
          if (r == s) v += sorted[rows[r].comp_idx].energy();
          h(r, s) = v;
          h(s, r) = v;
        }
      auto [vals, vecs] = sym_eigensystem(h);
      for (int e = 0; e < dim; ++e) {
        Eigen::VectorXd vec = vecs.col(e);
        fix_phase(vec);
        // dominant composition supplies the reference energy
        std::map<std::size_t, double> weight;
        for (int r = 0; r < dim; ++r) weight[rows[r].comp_idx] += vec[r] * vec[r];
        std::size_t dominant = rows[0].comp_idx;
        double best = -1.0;
        for (const auto& [ci, w] : weight)
          if (w > best) {
            best = w;
            dominant = ci;
          }
        SplitLevel lev;
        lev.base_energy = sorted[dominant].energy();
        lev.shift = vals[e] - lev.base_energy;
        const auto& row0 = bases[rows[0].comp_idx - i].rows()[rows[0].row_idx];
        lev.irrep.shape = row0.irrep;
        if (labeled) lev.irrep.parity = composition_parity(sorted[dominant], parities);
        lev.degeneracy = lev.irrep.dim();
        lev.eigvec = vec;
        lev.provenance = Provenance::weak;
        out.push_back(lev);
      }
    }
    i = j;
  }

  std::sort(out.begin(), out.end(), [](const SplitLevel& x, const SplitLevel& y) {
    if (x.total_energy() != y.total_energy()) return x.total_energy() < y.total_energy();
    return x.irrep.to_string() < y.irrep.to_string();
  });
  return out;
}

namespace {

struct BasisRow {
  int comp_idx;
  int row_idx;
};

}  // namespace

std::vector<SplitLevel> exact_diagonalize(const OneBodySolution& sol, int n,
                                          const EDConfig& cfg) {
  if (n != 2 && n != 3) throw UnsupportedN("exact diagonalization is provided for N = 2, 3");
  cfg.interaction.validate();
  const Eigen::VectorXd& sigma1 = sol.energies();
  if (cfg.e_max > (n - 1) * sigma1[0] + sigma1[sigma1.size() - 1])
    throw GridTooSmall("truncation energy exceeds the solved one-particle spectrum");
  const auto comps = enumerate_compositions(sigma1, n, cfg.e_max);
  if (comps.empty()) throw EmptySector("no composition below the truncation energy");

  std::set<int> used;
  for (const auto& c : comps)
    for (int l : c.labels()) used.insert(l);

  const bool contact = cfg.interaction.kind == InteractionKind::contact;
  const bool labeled = sol.has_parities();
  if (cfg.sector && cfg.sector->parity && !labeled)
    throw AsymmetricTrap("parity sector requested for a trap without parity");

  std::vector<SymmetrizedBasis> bases;
  bases.reserve(comps.size());
  for (const auto& c : comps) bases.push_back(symmetrized_basis(c));

  const auto sy = standard_young_tableaux({2, 1});
  if (cfg.young_rep < 0 || cfg.young_rep >= static_cast<int>(sy.size()))
    throw Error("young_rep must be 0 or 1");

  // sector key -> rows
  std::map<std::string, std::vector<BasisRow>> blocks;
  std::map<std::string, IrrepLabel> block_label;
  for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
    for (int r = 0; r < bases[k].size(); ++r) {
      const auto& row = bases[k].rows()[r];
      if (n == 3 && row.irrep == std::vector<int>{2, 1} && !(row.young == sy[cfg.young_rep]))
        continue;
      IrrepLabel label{row.irrep, {}};
      if (labeled) label.parity = composition_parity(comps[k], sol.parities());
      if (cfg.sector) {
        if (cfg.sector->shape != label.shape) continue;
        if (cfg.sector->parity && label.parity != cfg.sector->parity) continue;
      }
      const std::string key = label.to_string();
      blocks[key].push_back({k, r});
      block_label.emplace(key, label);
    }
  }
  if (blocks.empty()) throw EmptySector("sector has no basis state below the truncation");

  // Two-body elements. Contact N=2 blocks never touch a table: the contact
  // kernel makes V a Gram matrix of weighted pair densities, which both the
  // dense and the iterative path exploit directly.
  const bool gram_path = contact && n == 2;
  std::optional<TwoBodyTable> table;
  if (!gram_path) {
    if (contact)
      table = contact_elements(sol, used, cfg.interaction.g);
    else
      table = general_elements(sol, cfg.interaction, used);
  }

  std::vector<SplitLevel> out;
  for (const auto& [key, rows] : blocks) {
    const int dim = static_cast<int>(rows.size());
    const IrrepLabel& label = block_label.at(key);

    Eigen::VectorXd vals;
    Eigen::MatrixXd vecs;
    const int want = cfg.lowest_k ? std::min(*cfg.lowest_k, dim) : dim;

    if (gram_path) {
      // V_rs = g integral u_r u_s with u_r = (sum of row coefficients)
      // phi_a phi_b; exact for the contact kernel.
      const auto& phi = sol.wavefunctions();
      const int npts = sol.grid().n_points;
      const double h_grid = sol.h();
      Eigen::VectorXd w = Eigen::VectorXd::Constant(npts, h_grid);
      w[0] = w[npts - 1] = h_grid / 2.0;

      Eigen::VectorXd e0(dim);
      Eigen::MatrixXd u(npts, dim);
      for (int r = 0; r < dim; ++r) {
        const auto& comp = comps[rows[r].comp_idx];
        e0[r] = comp.energy();
        const double coeff_sum = bases[rows[r].comp_idx].coeffs().row(rows[r].row_idx).sum();
        u.col(r) =
            coeff_sum * phi.col(comp.labels()[0]).cwiseProduct(phi.col(comp.labels()[1]));
      }
      const double g = cfg.interaction.g;
      if (dim <= cfg.max_dense_dim) {
        Eigen::MatrixXd h = g * (u.transpose() * w.asDiagonal() * u);
        h += e0.asDiagonal();
        if (cfg.lowest_k)
          std::tie(vals, vecs) = sym_lowest(h, want);
        else
          std::tie(vals, vecs) = sym_eigensystem(h);
      } else if (cfg.lowest_k) {
        auto apply = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
          Eigen::VectorXd y = (u * x).cwiseProduct(w);
          return e0.cwiseProduct(x) + g * (u.transpose() * y);
        };
        std::tie(vals, vecs) = lanczos_lowest(apply, dim, want);
      } else {
        throw BlockTooLarge("sector block exceeds the dense eigensolver limit of " +
                            std::to_string(cfg.max_dense_dim));
      }
    } else if (dim <= cfg.max_dense_dim) {
      Eigen::MatrixXd h(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int s = r; s < dim; ++s) {
          const auto& ba = bases[rows[r].comp_idx];
          const auto& bb = bases[rows[s].comp_idx];
          double v = 0.0;
          for (std::size_t p = 0; p < ba.sequences().size(); ++p) {
            const double wa = ba.coeffs()(rows[r].row_idx, p);
            if (wa == 0.0) continue;
            for (std::size_t q = 0; q < bb.sequences().size(); ++q) {
              const double wb = bb.coeffs()(rows[s].row_idx, q);
              if (wb == 0.0) continue;
              v += wa * wb *
                   sequence_interaction_element(ba.sequences()[p], bb.sequences()[q], *table);
            }
          }
          if (r == s) v += comps[rows[r].comp_idx].energy();
          h(r, s) = v;
          h(s, r) = v;
        }
      if (cfg.lowest_k) {
        std::tie(vals, vecs) = sym_lowest(h, want);
      } else {
        std::tie(vals, vecs) = sym_eigensystem(h);
      }
    } else {
      throw BlockTooLarge("sector block exceeds the dense eigensolver limit of " +
                          std::to_string(cfg.max_dense_dim));
    }

    for (int e = 0; e < want; ++e) {
      Eigen::VectorXd vec = vecs.col(e);
      fix_phase(vec);
      double best = -1.0;
      int dominant = 0;
      std::map<int, double> weight;
      for (int r = 0; r < dim; ++r) weight[rows[r].comp_idx] += vec[r] * vec[r];
      for (const auto& [ci, wgt] : weight)
        if (wgt > best) {
          best = wgt;
          dominant = ci;
        }
      SplitLevel lev;
      lev.base_energy = comps[dominant].energy();
      lev.shift = vals[e] - lev.base_energy;
      lev.irrep = label;
      lev.degeneracy = label.dim();
      lev.eigvec = vec;
      lev.provenance = Provenance::ed;
      out.push_back(lev);
    }
  }

  std::sort(out.begin(), out.end(), [](const SplitLevel& x, const SplitLevel& y) {
    if (x.total_energy() != y.total_energy()) return x.total_energy() < y.total_energy();
    return x.irrep.to_string() < y.irrep.to_string();
  });
  if (cfg.lowest_k && static_cast<int>(out.size()) > *cfg.lowest_k)
    out.resize(*cfg.lowest_k);
  return out;
}

}  // namespace fewbody
