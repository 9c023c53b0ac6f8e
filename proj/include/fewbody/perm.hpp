#pragma once

#include <map>
#include <string>
#include <vector>

#include "fewbody/errors.hpp"

namespace fewbody {

// A permutation of {1..N}, stored with 0-based images. The convention is
// anchored to the coordinate action O(p)(q_1,...,q_N) = (q_{p_1},...,q_{p_N}):
// acting on a sequence returns out[i] = seq[p[i]].
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  // images in 0-based form, e.g. {2,0,1} for the paper-style {312}
  static Perm from_images(std::vector<int> images);
  // one-based permutation notation, e.g. {3,1,2} for {312}
  static Perm from_one_based(const std::vector<int>& images);
  // cycle notation with 0-based labels; (a b c) maps a->b, b->c, c->a,
  // i.e. contributes p_a = b and so on
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, canonical
  std::string to_string() const;                 // "{312}"
  std::string cycle_string() const;              // "(132)" or "e"

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

// compose(a, b) acts like "apply b, then a" on sequences:
// act(compose(a,b), s) == act(a, act(b, s)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_invert(const Perm& a);
int perm_sign(const Perm& a);

// Particle-basis action U(p)|n_1 n_2 ... n_N> = |n_{p_1} ... n_{p_N}>.
std::vector<int> act_particle_basis(const Perm& p, const std::vector<int>& seq);

// A permutation of state labels (not particle slots). Labels absent from the
// map are fixed points.
struct StatePerm {
  std::map<int, int> images;  // bijection label -> label

  static StatePerm identity() { return {}; }
  static StatePerm transposition(int a, int b);
  // (l_0 l_1 ... l_{k-1}): l_0 -> l_1 -> ... -> l_0
  static StatePerm cycle(const std::vector<int>& labels);

  void validate() const;  // bijection check
};

// Replaces every occurrence of label x by sp(x). Throws LabelNotInComposition
// if sp moves a label that does not occur in the sequence.
std::vector<int> act_state_perm(const StatePerm& sp, const std::vector<int>& seq);

}  // namespace fewbody
