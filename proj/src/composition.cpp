#include "fewbody/composition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace fewbody {

Composition::Composition(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptySpectrum("composition needs at least one label");
  for (int l : labels_)
    if (l < 0) throw StateOutOfRange("composition labels must be >= 0");
  std::sort(labels_.begin(), labels_.end());
}

Composition::Composition(std::vector<int> labels, const Eigen::VectorXd& sigma1)
    : Composition(std::move(labels)) {
  energy_ = 0.0;
  for (int l : labels_) {
    if (l >= sigma1.size()) throw StateOutOfRange("composition label beyond spectrum");
    energy_ += sigma1[l];
  }
  has_energy_ = true;
}

std::vector<int> Composition::distinct_labels() const {
  std::vector<int> out;
  for (int l : labels_)
    if (out.empty() || out.back() != l) out.push_back(l);
  return out;
}

std::vector<int> Composition::multiplicities() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i == 0 || labels_[i] != labels_[i - 1])
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

std::vector<int> Composition::shape() const {
  std::vector<int> m = multiplicities();
  std::sort(m.rbegin(), m.rend());
  return m;
}

long Composition::degeneracy() const {
  long num = 1;
  for (int i = 2; i <= n(); ++i) num *= i;
  for (int m : multiplicities())
    for (int i = 2; i <= m; ++i) num /= i;
  return num;
}

double Composition::energy() const {
  if (!has_energy_) throw Error("composition has no attached spectrum");
  return energy_;
}

std::vector<std::vector<int>> Composition::sequences() const {
  std::vector<std::vector<int>> out;
  std::vector<int> seq = labels_;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(labels_[i]);
  }
  return s + ")";
}

std::string Composition::csv_field() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(labels_[i]);
  }
  return s;
}

std::string partition_to_string(const std::vector<int>& shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size();) {
    std::size_t j = i;
    while (j < shape.size() && shape[j] == shape[i]) ++j;
    s += std::to_string(shape[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

std::vector<int> partition_from_string(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ConfigInvalid("partition must look like [21] or [1^3]");
  std::vector<int> shape;
  std::size_t i = 1;
  while (i + 1 < s.size()) {
    if (!std::isdigit(s[i])) throw ConfigInvalid("bad partition: " + s);
    int part = s[i] - '0';
    ++i;
    int reps = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      reps = 0;
      while (i + 1 < s.size() && std::isdigit(s[i])) reps = reps * 10 + (s[i++] - '0');
      if (reps == 0) throw ConfigInvalid("bad partition: " + s);
    }
    for (int r = 0; r < reps; ++r) shape.push_back(part);
  }
  if (!std::is_sorted(shape.rbegin(), shape.rend()))
    throw ConfigInvalid("partition parts must be descending: " + s);
  return shape;
}

std::vector<int> conjugate_partition(const std::vector<int>& shape) {
  if (shape.empty()) return {};
  std::vector<int> out(shape[0], 0);
  for (int part : shape)
    for (int c = 0; c < part; ++c) ++out[c];
  return out;
}

int irrep_dim(const std::vector<int>& shape) {
  // hook length formula
  int n = 0;
  for (int p : shape) n += p;
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const auto conj = conjugate_partition(shape);
  long hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c)
      hooks *= (shape[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
  return static_cast<int>(fact / hooks);
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace fewbody
