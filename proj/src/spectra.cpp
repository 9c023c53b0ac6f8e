#include "fewbody/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fewbody/spin.hpp"

namespace fewbody {

namespace {

struct ClassRow {
  const char* k0;
  std::vector<std::pair<std::string, int>> c0;
  std::vector<std::pair<std::string, int>> k;
};

// Literal classification data for symmetric traps, keyed by (N, parity
// pattern class). The two all-distinct all-even / all-odd rows for N = 3 are
// not tabulated in the source material beyond their pattern label; their
// point-group content (A1g + 2Eg + A2g and A2u + 2Eu + A1u) follows from the
// trivial / sign action of the individual inversions on those levels.
const std::map<std::string, ClassRow>& table_n2() {
  static const std::map<std::string, ClassRow> t{
      {"+^2", {"+^2", {{"A1", 1}}, {{"[2]^+", 1}}}},
      {"-^2", {"-^2", {{"A2", 1}}, {{"[2]^+", 1}}}},
      {"+_1+_2", {"+_1+_2", {{"A1", 1}, {"B1", 1}}, {{"[2]^+", 1}, {"[1^2]^+", 1}}}},
      {"-_1-_2", {"-_1-_2", {{"A2", 1}, {"B2", 1}}, {{"[2]^+", 1}, {"[1^2]^+", 1}}}},
      {"+-", {"+-", {{"E", 1}}, {{"[2]^-", 1}, {"[1^2]^-", 1}}}},
  };
  return t;
}

const std::map<std::string, ClassRow>& table_n3() {
  static const std::map<std::string, ClassRow> t{
      {"+^3", {"+^3", {{"A1g", 1}}, {{"[3]^+", 1}}}},
      {"-^3", {"-^3", {{"A2u", 1}}, {{"[1^3]^-", 1}}}},
      {"+_1^2+_2", {"+_1^2+_2", {{"A1g", 1}, {"Eg", 1}}, {{"[3]^+", 1}, {"[21]^+", 1}}}},
      {"+^2-", {"+^2-", {{"T1u", 1}}, {{"[3]^-", 1}, {"[21]^-", 1}}}},
      {"+-^2", {"+-^2", {{"T2g", 1}}, {{"[3]^+", 1}, {"[21]^+", 1}}}},
      {"-_1^2-_2", {"-_1^2-_2", {{"A2u", 1}, {"Eu", 1}}, {{"[3]^-", 1}, {"[21]^-", 1}}}},
      {"+_1+_2+_3",
       {"+_1+_2+_3",
        {{"A1g", 1}, {"Eg", 2}, {"A2g", 1}},
        {{"[3]^+", 1}, {"[21]^+", 2}, {"[1^3]^+", 1}}}},
      {"+_1+_2-",
       {"+_1+_2-",
        {{"T1u", 1}, {"T2u", 1}},
        {{"[3]^-", 1}, {"[21]^-", 2}, {"[1^3]^-", 1}}}},
      {"+-_1-_2",
       {"+-_1-_2",
        {{"T1g", 1}, {"T2g", 1}},
        {{"[3]^+", 1}, {"[21]^+", 2}, {"[1^3]^+", 1}}}},
      {"-_1-_2-_3",
       {"-_1-_2-_3",
        {{"A2u", 1}, {"Eu", 2}, {"A1u", 1}},
        {{"[3]^-", 1}, {"[21]^-", 2}, {"[1^3]^-", 1}}}},
  };
  return t;
}

std::string parity_pattern(const Composition& comp, const std::vector<int>& parities) {
  const auto distinct = comp.distinct_labels();
  const auto mults = comp.multiplicities();
  std::vector<int> par(distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (distinct[i] >= static_cast<int>(parities.size()))
      throw UnknownClass("parity missing for state " + std::to_string(distinct[i]));
    par[i] = parities[distinct[i]];
  }

  const int n = comp.n();
  const auto shape = comp.shape();
  if (n == 2) {
    if (shape == std::vector<int>{2}) return par[0] > 0 ? "+^2" : "-^2";
    if (par[0] > 0 && par[1] > 0) return "+_1+_2";
    if (par[0] < 0 && par[1] < 0) return "-_1-_2";
    return "+-";
  }
  if (shape == std::vector<int>{3}) return par[0] > 0 ? "+^3" : "-^3";
  if (shape == std::vector<int>{2, 1}) {
    int doubled = 0, single = 0;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      (mults[i] == 2 ? doubled : single) = par[i];
    if (doubled > 0) return single > 0 ? "+_1^2+_2" : "+^2-";
    return single > 0 ? "+-^2" : "-_1^2-_2";
  }
  const long pluses = std::count(par.begin(), par.end(), 1);
  switch (pluses) {
    case 3: return "+_1+_2+_3";
    case 2: return "+_1+_2-";
    case 1: return "+-_1-_2";
    default: return "-_1-_2-_3";
  }
}

std::string irrep_list_string(const std::vector<std::pair<std::string, int>>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += " + ";
    if (items[i].second > 1) s += std::to_string(items[i].second);
    s += items[i].first;
  }
  return s;
}

}  // namespace

std::string to_string(TrapSymmetry s) {
  switch (s) {
    case TrapSymmetry::asymmetric: return "asymmetric";
    case TrapSymmetry::symmetric: return "symmetric";
    case TrapSymmetry::harmonic: return "harmonic";
  }
  throw Error("unknown trap symmetry");
}

std::vector<Composition> enumerate_compositions(const Eigen::VectorXd& sigma1, int n,
                                                double e_max) {
  if (sigma1.size() == 0) throw EmptySpectrum("empty one-particle spectrum");
  for (int i = 0; i + 1 < sigma1.size(); ++i)
    if (!(sigma1[i] < sigma1[i + 1])) throw EmptySpectrum("sigma1 must be ascending");
  if (n < 1 || n > 3) throw UnsupportedN("compositions are enumerated for N = 1..3");

  std::vector<Composition> out;
  std::vector<int> labels;
  std::function<void(int, double)> rec = [&](int next_min, double remaining) {
    if (static_cast<int>(labels.size()) == n) {
      out.emplace_back(labels, sigma1);
      return;
    }
    const int slots_left = n - static_cast<int>(labels.size());
    for (int idx = next_min; idx < sigma1.size(); ++idx) {
      // remaining slots must at least fit copies of this state
      if (sigma1[idx] * slots_left > remaining + 1e-12) break;
      labels.push_back(idx);
      rec(idx, remaining - sigma1[idx]);
      labels.pop_back();
    }
  };
  rec(0, e_max);

  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    if (a.energy() != b.energy()) return a.energy() < b.energy();
    return a.labels() < b.labels();
  });
  return out;
}

bool abstract_precedes(const Composition& a, const Composition& b) {
  if (a.n() != b.n()) throw SizeMismatch("comparing compositions of different N");
  for (int i = 0; i < a.n(); ++i)
    if (a.labels()[i] > b.labels()[i]) return false;
  return true;
}

std::vector<std::pair<int, int>> partial_order_edges(const std::vector<Composition>& comps) {
  const int m = static_cast<int>(comps.size());
  auto strictly = [&](int i, int j) {
    return !(comps[i] == comps[j]) && abstract_precedes(comps[i], comps[j]);
  };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!strictly(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k)
        if (k != i && k != j && strictly(i, k) && strictly(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

std::string LevelClassification::c0_string() const { return irrep_list_string(c0_irreps); }
std::string LevelClassification::k_string() const { return irrep_list_string(k_irreps); }

int point_group_irrep_dim(const std::string& name) {
  if (name.empty()) throw UnknownClass("empty irrep name");
  if (name[0] == '[') {
    std::string core = name;
    const auto caret = core.find("]^");
    if (caret != std::string::npos) core = core.substr(0, caret + 1);
    return irrep_dim(partition_from_string(core));
  }
  switch (name[0]) {
    case 'A':
    case 'B': return 1;
    case 'E': return 2;
    case 'T': return 3;
  }
  throw UnknownClass("unknown irrep name: " + name);
}

LevelClassification classify_level(const Composition& comp, const std::vector<int>& parities,
                                   TrapSymmetry sym) {
  const int n = comp.n();
  if (n < 2 || n > 3) throw UnsupportedN("classification is provided for N = 2, 3");

  LevelClassification out;
  if (sym == TrapSymmetry::asymmetric) {
    // S_N-only classification: the permutation-module content, no parity.
    out.k0_class = partition_to_string(comp.shape());
    for (const auto& [shape, mult] : spatial_irrep_content(comp)) {
      out.c0_irreps.emplace_back(partition_to_string(shape), mult);
      out.k_irreps.emplace_back(partition_to_string(shape), mult);
    }
    std::sort(out.c0_irreps.begin(), out.c0_irreps.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    out.k_irreps = out.c0_irreps;
    return out;
  }

  const std::string pattern = parity_pattern(comp, parities);
  const auto& table = (n == 2) ? table_n2() : table_n3();
  const auto it = table.find(pattern);
  if (it == table.end()) throw UnknownClass("parity pattern not in table: " + pattern);
  out.k0_class = it->second.k0;
  out.c0_irreps = it->second.c0;
  out.k_irreps = it->second.k;
  return out;
}

Composition fermi_bose_map(const Composition& comp) {
  std::vector<int> labels = comp.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] += static_cast<int>(i);
  return Composition(std::move(labels));
}

long emergent_degeneracy_check(const TrapSpec& trap, long x, int n) {
  if (trap.kind != TrapKind::harmonic)
    throw UnsupportedTrap("emergent degeneracy counting applies to the harmonic trap");
  if (x < 0) throw Error("total excitation must be >= 0");
  if (n == 2) return x + 1;
  if (n == 3) return (x + 1) * (x + 2) / 2;
  throw UnsupportedN("emergent degeneracy counting is provided for N = 2, 3");
}

}  // namespace fewbody
