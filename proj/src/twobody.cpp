#include "fewbody/twobody.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fewbody {

namespace {

void check_states(const OneBodySolution& sol, const std::set<int>& states) {
  for (int s : states)
    if (s < 0 || s >= sol.n_states())
      throw StateOutOfRange("two-body table state beyond solved spectrum");
}

}  // namespace

std::string to_string(InteractionKind k) {
  switch (k) {
    case InteractionKind::contact: return "contact";
    case InteractionKind::gaussian: return "gaussian";
    case InteractionKind::sampled_kernel: return "sampled_kernel";
  }
  throw UnsupportedKind("unknown interaction kind");
}

InteractionSpec InteractionSpec::Contact(double g) {
  InteractionSpec s;
  s.kind = InteractionKind::contact;
  s.g = g;
  return s;
}

InteractionSpec InteractionSpec::Gaussian(double strength, double range) {
  InteractionSpec s;
  s.kind = InteractionKind::gaussian;
  s.strength = strength;
  s.range = range;
  s.validate();
  return s;
}

InteractionSpec InteractionSpec::SampledKernel(std::vector<double> sep,
                                               std::vector<double> val) {
  InteractionSpec s;
  s.kind = InteractionKind::sampled_kernel;
  s.kernel_sep = std::move(sep);
  s.kernel_val = std::move(val);
  s.validate();
  return s;
}

void InteractionSpec::validate() const {
  switch (kind) {
    case InteractionKind::contact:
      return;
    case InteractionKind::gaussian:
      if (!(range > 0.0)) throw UnsupportedKind("gaussian range must be > 0");
      return;
    case InteractionKind::sampled_kernel:
      if (kernel_sep.size() != kernel_val.size() || kernel_sep.size() < 2)
        throw UnsupportedKind("sampled kernel needs matching sep/value samples");
      if (!std::is_sorted(kernel_sep.begin(), kernel_sep.end()) || kernel_sep.front() < 0.0)
        throw UnsupportedKind("sampled kernel separations must be ascending and >= 0");
      return;
  }
}

double InteractionSpec::kernel(double separation) const {
  const double d = std::abs(separation);
  switch (kind) {
    case InteractionKind::contact:
      throw UnsupportedKind("contact kernel has no pointwise value");
    case InteractionKind::gaussian:
      return strength * std::exp(-d * d / (2.0 * range * range));
    case InteractionKind::sampled_kernel: {
      if (d <= kernel_sep.front()) return kernel_val.front();
      if (d >= kernel_sep.back()) return 0.0;  // beyond samples: no interaction
      auto hi = std::upper_bound(kernel_sep.begin(), kernel_sep.end(), d);
      const std::size_t j = static_cast<std::size_t>(hi - kernel_sep.begin());
      const double w = (d - kernel_sep[j - 1]) / (kernel_sep[j] - kernel_sep[j - 1]);
      return (1.0 - w) * kernel_val[j - 1] + w * kernel_val[j];
    }
  }
  throw UnsupportedKind("unknown interaction kind");
}

TwoBodyTable::TwoBodyTable(TableKind kind, std::set<int> states)
    : kind_(kind), states_(std::move(states)) {}

std::uint64_t TwoBodyTable::contact_key(int a, int b, int c, int d) {
  std::array<int, 4> v{a, b, c, d};
  std::sort(v.begin(), v.end());
  std::uint64_t k = 0;
  for (int x : v) k = (k << 16) | static_cast<std::uint64_t>(x);
  return k;
}

std::uint64_t TwoBodyTable::general_key(int a, int b, int c, int d) {
  // <ab|V|cd> = v over the transition pairs {a,c} and {b,d}
  std::array<int, 2> p1{std::min(a, c), std::max(a, c)};
  std::array<int, 2> p2{std::min(b, d), std::max(b, d)};
  if (std::tie(p2[0], p2[1]) < std::tie(p1[0], p1[1])) std::swap(p1, p2);
  return (static_cast<std::uint64_t>(p1[0]) << 48) |
         (static_cast<std::uint64_t>(p1[1]) << 32) |
         (static_cast<std::uint64_t>(p2[0]) << 16) | static_cast<std::uint64_t>(p2[1]);
}

std::uint64_t TwoBodyTable::key(int a, int b, int c, int d) const {
  return kind_ == TableKind::contact ? contact_key(a, b, c, d) : general_key(a, b, c, d);
}

double TwoBodyTable::value(int a, int b, int c, int d) const {
  const auto it = storage_.find(key(a, b, c, d));
  if (it == storage_.end())
    throw MissingElement("two-body element not in table: <" + std::to_string(a) + " " +
                         std::to_string(b) + "|V|" + std::to_string(c) + " " +
                         std::to_string(d) + ">");
  return it->second;
}

bool TwoBodyTable::contains(int a, int b, int c, int d) const {
  return storage_.count(key(a, b, c, d)) > 0;
}

void TwoBodyTable::set(int a, int b, int c, int d, double v) {
  storage_[key(a, b, c, d)] = v;
}

TwoBodyTable contact_elements(const OneBodySolution& sol, const std::set<int>& states,
                              double g) {
  check_states(sol, states);
  TwoBodyTable table(TableKind::contact, states);
  const double h = sol.h();
  const auto& phi = sol.wavefunctions();
  const std::vector<int> list(states.begin(), states.end());
  const int m = static_cast<int>(list.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k)
        for (int l = k; l < m; ++l) {
          const Eigen::VectorXd prod = phi.col(list[i]).cwiseProduct(phi.col(list[j]))
                                           .cwiseProduct(phi.col(list[k]))
                                           .cwiseProduct(phi.col(list[l]));
          table.set(list[i], list[j], list[k], list[l], g * trapezoid(prod, h));
        }
  return table;
}

TwoBodyTable general_elements(const OneBodySolution& sol, const InteractionSpec& spec,
                              const std::set<int>& states) {
  spec.validate();
  if (spec.kind == InteractionKind::contact)
    throw UnsupportedKind("contact elements have their own fast path");
  check_states(sol, states);
  if (spec.kind == InteractionKind::gaussian && !(spec.range > 2.0 * sol.h()))
    throw KernelUndersampled("gaussian range must exceed twice the grid spacing");
  if (spec.kind == InteractionKind::sampled_kernel &&
      !(spec.kernel_sep.back() > 2.0 * sol.h()))
    throw KernelUndersampled("sampled kernel support must exceed twice the grid spacing");

  const int n = sol.grid().n_points;
  const double h = sol.h();
  const auto& phi = sol.wavefunctions();
  const auto& q = sol.points();

  // Trapezoid weights.
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, h);
  w[0] = w[n - 1] = h / 2.0;

  Eigen::MatrixXd kernel(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) kernel(i, j) = spec.kernel(q[i] - q[j]);

  const std::vector<int> list(states.begin(), states.end());
  const int m = static_cast<int>(list.size());

  // Weighted pair densities f_{ac}(q) = w(q) phi_a(q) phi_c(q); each element
  // is then f_{ac}^T K f_{bd}.
  std::vector<Eigen::VectorXd> pair_density;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      pairs.emplace_back(list[i], list[j]);
      pair_density.push_back(
          w.cwiseProduct(phi.col(list[i])).cwiseProduct(phi.col(list[j])));
    }

  std::vector<Eigen::VectorXd> kernel_applied(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) kernel_applied[p] = kernel * pair_density[p];

  TwoBodyTable table(TableKind::general, states);
  for (std::size_t p1 = 0; p1 < pairs.size(); ++p1)
    for (std::size_t p2 = p1; p2 < pairs.size(); ++p2) {
      const double v = pair_density[p1].dot(kernel_applied[p2]);
      // pairs are the transition pairs {a,c} and {b,d}
      table.set(pairs[p1].first, pairs[p2].first, pairs[p1].second, pairs[p2].second, v);
    }
  return table;
}

}  // namespace fewbody
