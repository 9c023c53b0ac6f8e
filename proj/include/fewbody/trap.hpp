#pragma once

#include <string>
#include <vector>

#include "fewbody/errors.hpp"

namespace fewbody {

enum class TrapKind {
  harmonic,       // V = (q - offset)^2 / 2, so eps_n = n + 1/2
  power_law,      // V = |q - offset|^z, z > 0
  polynomial,     // V = sum_k c_k (q - offset)^k
  infinite_well,  // hard walls at offset -/+ width/2
  double_well,    // V = a (q - offset)^4 - b (q - offset)^2
  custom_sampled  // linear interpolation of (q, V) samples
};

std::string to_string(TrapKind k);
TrapKind trap_kind_from_string(const std::string& s);

struct TrapSpec {
  TrapKind kind = TrapKind::harmonic;
  double offset = 0.0;

  double exponent = 0.0;                 // power_law
  std::vector<double> coefficients;      // polynomial
  double width = 0.0;                    // infinite_well
  double quartic = 1.0;                  // double_well a
  double quadratic = 2.0;                // double_well b
  std::vector<double> sample_q;          // custom_sampled
  std::vector<double> sample_v;

  static TrapSpec Harmonic(double offset = 0.0);
  static TrapSpec PowerLaw(double z, double offset = 0.0);
  static TrapSpec Polynomial(std::vector<double> coeffs, double offset = 0.0);
  static TrapSpec InfiniteWell(double width, double offset = 0.0);
  static TrapSpec DoubleWell(double a = 1.0, double b = 2.0, double offset = 0.0);
  static TrapSpec CustomSampled(std::vector<double> q, std::vector<double> v);

  void validate() const;

  // Potential value; for infinite_well only defined inside the box (zero).
  double potential(double q) const;

  // True iff V(-q) = V(q) after removing the offset, established
  // structurally where possible and by sampling for sampled traps.
  bool is_symmetric() const;

  bool is_harmonic() const { return kind == TrapKind::harmonic; }
};

}  // namespace fewbody
