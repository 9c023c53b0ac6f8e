#include "fewbody/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fewbody {

Perm Perm::identity(int n) {
  Perm p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) throw SizeMismatch("images are not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) zero[i] = images[i] - 1;
  return from_images(std::move(zero));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw SizeMismatch("cycle label out of range");
      img[from] = to;
    }
  }
  return from_images(std::move(img));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = images_[cur];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_string() const {
  std::string s = "{";
  for (int v : images_) s += std::to_string(v + 1);
  return s + "}";
}

std::string Perm::cycle_string() const {
  const auto cyc = cycles();
  if (cyc.empty()) return "e";
  std::string s;
  for (const auto& c : cyc) {
    s += "(";
    for (int v : c) s += std::to_string(v + 1);
    s += ")";
  }
  return s;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw SizeMismatch("perm_compose: size mismatch");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = b.image(a.image(i));
  return Perm::from_images(std::move(img));
}

Perm perm_invert(const Perm& a) {
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[a.image(i)] = i;
  return Perm::from_images(std::move(img));
}

int perm_sign(const Perm& a) {
  int sign = 1;
  for (const auto& c : a.cycles())
    if (c.size() % 2 == 0) sign = -sign;
  return sign;
}

std::vector<int> act_particle_basis(const Perm& p, const std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) != p.size())
    throw SizeMismatch("act_particle_basis: sequence length != N");
  std::vector<int> out(seq.size());
  for (int i = 0; i < p.size(); ++i) out[i] = seq[p.image(i)];
  return out;
}

StatePerm StatePerm::transposition(int a, int b) {
  StatePerm sp;
  sp.images[a] = b;
  sp.images[b] = a;
  return sp;
}

StatePerm StatePerm::cycle(const std::vector<int>& labels) {
  StatePerm sp;
  for (std::size_t i = 0; i < labels.size(); ++i)
    sp.images[labels[i]] = labels[(i + 1) % labels.size()];
  return sp;
}

void StatePerm::validate() const {
  std::set<int> vals;
  for (const auto& [from, to] : images) {
    vals.insert(to);
    if (!images.count(to)) throw SizeMismatch("state permutation not a bijection");
  }
  if (vals.size() != images.size()) throw SizeMismatch("state permutation not a bijection");
}

std::vector<int> act_state_perm(const StatePerm& sp, const std::vector<int>& seq) {
  sp.validate();
  for (const auto& [from, to] : sp.images) {
    (void)to;
    if (std::find(seq.begin(), seq.end(), from) == seq.end())
      throw LabelNotInComposition("state permutation moves a label not in the composition");
  }
  std::vector<int> out = seq;
  for (auto& v : out) {
    auto it = sp.images.find(v);
    if (it != sp.images.end()) v = it->second;
  }
  return out;
}

}  // namespace fewbody
