#include "fewbody/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fewbody {

bool Tableau::valid() const {
  if (rows.size() != shape.size()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (static_cast<int>(rows[r].size()) != shape[r]) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c + 1 < rows[r].size(); ++c) {
      if (flavor == TableauFlavor::young && !(rows[r][c] < rows[r][c + 1])) return false;
      if (flavor == TableauFlavor::weyl && !(rows[r][c] <= rows[r][c + 1])) return false;
    }
    if (r + 1 < rows.size())
      for (std::size_t c = 0; c < rows[r + 1].size(); ++c)
        if (!(rows[r][c] < rows[r + 1][c])) return false;
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

std::vector<Tableau> enumerate_tableaux(const std::vector<int>& shape,
                                        const std::vector<std::pair<int, int>>& alphabet,
                                        TableauFlavor flavor) {
  int boxes = 0;
  for (int p : shape) boxes += p;
  int letters = 0;
  for (const auto& [label, mult] : alphabet) {
    (void)label;
    letters += mult;
  }
  if (letters != boxes)
    throw ShapeAlphabetMismatch("alphabet multiplicities must fill the shape exactly");
  if (flavor == TableauFlavor::young) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i].second != 1)
        throw ShapeAlphabetMismatch("young tableaux need each particle label once");
  }

  // Flatten box coordinates in row-major order; fill labels recursively with
  // the row/column constraints. Lexicographic output order follows from
  // trying labels in ascending order.
  std::vector<std::pair<int, int>> boxes_rc;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) boxes_rc.emplace_back(static_cast<int>(r), c);

  std::vector<Tableau> out;
  Tableau t;
  t.shape = shape;
  t.flavor = flavor;
  t.rows.resize(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t.rows[r].resize(shape[r]);
  std::vector<int> remaining(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) remaining[i] = alphabet[i].second;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes_rc.size()) {
      out.push_back(t);
      return;
    }
    const auto [r, c] = boxes_rc[k];
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (remaining[i] == 0) continue;
      const int label = alphabet[i].first;
      if (c > 0) {
        const int left = t.rows[r][c - 1];
        if (flavor == TableauFlavor::young ? !(left < label) : !(left <= label)) continue;
      }
      if (r > 0 && !(t.rows[r - 1][c] < label)) continue;
      t.rows[r][c] = label;
      --remaining[i];
      rec(k + 1);
      ++remaining[i];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> weyl_tableaux_for_composition(const Composition& comp) {
  std::vector<std::pair<int, int>> alphabet;
  const auto labels = comp.distinct_labels();
  const auto mults = comp.multiplicities();
  for (std::size_t i = 0; i < labels.size(); ++i) alphabet.emplace_back(labels[i], mults[i]);

  std::vector<Tableau> out;
  for (const auto& shape : partitions_of(comp.n())) {
    auto ts = enumerate_tableaux(shape, alphabet, TableauFlavor::weyl);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::vector<Tableau> standard_young_tableaux(const std::vector<int>& shape) {
  int n = 0;
  for (int p : shape) n += p;
  std::vector<std::pair<int, int>> alphabet;
  for (int i = 1; i <= n; ++i) alphabet.emplace_back(i, 1);
  return enumerate_tableaux(shape, alphabet, TableauFlavor::young);
}

int count_semistandard_tableaux(const std::vector<int>& shape, int j) {
  int boxes = 0;
  for (int p : shape) boxes += p;
  // Sum the exact-content enumeration over all contents of size `boxes`
  // drawn from j letters.
  std::vector<std::pair<int, int>> alphabet(j);
  int total = 0;
  std::function<void(int, int)> rec = [&](int letter, int left) {
    if (letter == j) {
      if (left == 0) {
        std::vector<std::pair<int, int>> a;
        for (int i = 0; i < j; ++i)
          if (alphabet[i].second > 0) a.emplace_back(i + 1, alphabet[i].second);
        if (a.empty()) return;
        total += static_cast<int>(enumerate_tableaux(shape, a, TableauFlavor::weyl).size());
      }
      return;
    }
    for (int take = 0; take <= left; ++take) {
      alphabet[letter] = {letter + 1, take};
      rec(letter + 1, left - take);
    }
  };
  rec(0, boxes);
  return total;
}

}  // namespace fewbody
