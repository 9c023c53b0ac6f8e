#pragma once

#include <Eigen/Dense>

#include "fewbody/errors.hpp"

namespace fewbody {

// Uniform spatial grid q_min = q_0 < q_1 < ... < q_{n-1} = q_max.
struct Grid {
  double q_min = -10.0;
  double q_max = 10.0;
  int n_points = 1001;

  void validate() const {
    if (!(q_min < q_max)) throw GridTooSmall("grid: q_min must be < q_max");
    if (n_points < 64) throw GridTooSmall("grid: n_points must be >= 64");
  }

  double spacing() const { return (q_max - q_min) / (n_points - 1); }
  double point(int i) const { return q_min + spacing() * i; }

  Eigen::VectorXd points() const {
    Eigen::VectorXd q(n_points);
    for (int i = 0; i < n_points; ++i) q[i] = point(i);
    return q;
  }

  bool operator==(const Grid& o) const {
    return q_min == o.q_min && q_max == o.q_max && n_points == o.n_points;
  }
};

// Trapezoid rule on a uniform grid.
inline double trapezoid(const Eigen::VectorXd& f, double h) {
  return h * (f.sum() - 0.5 * (f[0] + f[f.size() - 1]));
}

}  // namespace fewbody
