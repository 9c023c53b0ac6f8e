#include "fewbody/trap.hpp"

#include <algorithm>
#include <cmath>

namespace fewbody {

std::string to_string(TrapKind k) {
  switch (k) {
    case TrapKind::harmonic: return "harmonic";
    case TrapKind::power_law: return "power_law";
    case TrapKind::polynomial: return "polynomial";
    case TrapKind::infinite_well: return "infinite_well";
    case TrapKind::double_well: return "double_well";
    case TrapKind::custom_sampled: return "custom_sampled";
  }
  throw UnsupportedKind("unknown trap kind");
}

TrapKind trap_kind_from_string(const std::string& s) {
  if (s == "harmonic") return TrapKind::harmonic;
  if (s == "power_law") return TrapKind::power_law;
  if (s == "polynomial") return TrapKind::polynomial;
  if (s == "infinite_well") return TrapKind::infinite_well;
  if (s == "double_well") return TrapKind::double_well;
  if (s == "custom_sampled") return TrapKind::custom_sampled;
  throw UnsupportedKind("unknown trap kind: " + s);
}

TrapSpec TrapSpec::Harmonic(double offset) {
  TrapSpec t;
  t.kind = TrapKind::harmonic;
  t.offset = offset;
  return t;
}

TrapSpec TrapSpec::PowerLaw(double z, double offset) {
  TrapSpec t;
  t.kind = TrapKind::power_law;
  t.exponent = z;
  t.offset = offset;
  t.validate();
  return t;
}

TrapSpec TrapSpec::Polynomial(std::vector<double> coeffs, double offset) {
  TrapSpec t;
  t.kind = TrapKind::polynomial;
  t.coefficients = std::move(coeffs);
  t.offset = offset;
  return t;
}

TrapSpec TrapSpec::InfiniteWell(double width, double offset) {
  TrapSpec t;
  t.kind = TrapKind::infinite_well;
  t.width = width;
  t.offset = offset;
  t.validate();
  return t;
}

TrapSpec TrapSpec::DoubleWell(double a, double b, double offset) {
  TrapSpec t;
  t.kind = TrapKind::double_well;
  t.quartic = a;
  t.quadratic = b;
  t.offset = offset;
  return t;
}

TrapSpec TrapSpec::CustomSampled(std::vector<double> q, std::vector<double> v) {
  TrapSpec t;
  t.kind = TrapKind::custom_sampled;
  t.sample_q = std::move(q);
  t.sample_v = std::move(v);
  t.validate();
  return t;
}

void TrapSpec::validate() const {
  switch (kind) {
    case TrapKind::power_law:
      if (!(exponent > 0.0)) throw UnsupportedKind("power_law exponent must be > 0");
      break;
    case TrapKind::infinite_well:
      if (!(width > 0.0)) throw UnsupportedKind("infinite_well width must be > 0");
      break;
    case TrapKind::custom_sampled: {
      if (sample_q.size() != sample_v.size() || sample_q.size() < 2)
        throw UnsupportedKind("custom_sampled needs matching q/V samples (>= 2)");
      if (!std::is_sorted(sample_q.begin(), sample_q.end()))
        throw UnsupportedKind("custom_sampled q samples must be ascending");
      break;
    }
    default:
      break;
  }
}

double TrapSpec::potential(double q) const {
  const double x = q - offset;
  switch (kind) {
    case TrapKind::harmonic:
      return 0.5 * x * x;
    case TrapKind::power_law:
      return std::pow(std::abs(x), exponent);
    case TrapKind::polynomial: {
      // Horner over c_k x^k
      double v = 0.0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * x + *it;
      return v;
    }
    case TrapKind::infinite_well:
      return 0.0;
    case TrapKind::double_well:
      return quartic * x * x * x * x - quadratic * x * x;
    case TrapKind::custom_sampled: {
      const double qq = q;
      if (qq <= sample_q.front()) return sample_v.front();
      if (qq >= sample_q.back()) return sample_v.back();
      auto hi = std::upper_bound(sample_q.begin(), sample_q.end(), qq);
      const std::size_t j = static_cast<std::size_t>(hi - sample_q.begin());
      const double q0 = sample_q[j - 1], q1 = sample_q[j];
      const double w = (qq - q0) / (q1 - q0);
      return (1.0 - w) * sample_v[j - 1] + w * sample_v[j];
    }
  }
  throw UnsupportedKind("unknown trap kind");
}

bool TrapSpec::is_symmetric() const {
  switch (kind) {
    case TrapKind::harmonic:
    case TrapKind::power_law:
    case TrapKind::infinite_well:
    case TrapKind::double_well:
      return true;
    case TrapKind::polynomial: {
      double scale = 1e-300;
      for (double c : coefficients) scale = std::max(scale, std::abs(c));
      for (std::size_t k = 1; k < coefficients.size(); k += 2)
        if (std::abs(coefficients[k]) > 1e-12 * scale) return false;
      return true;
    }
    case TrapKind::custom_sampled: {
      // Sampling test of V(-x) = V(x) on the overlap of the sampled range.
      const double lo = sample_q.front() - offset, hi = sample_q.back() - offset;
      const double half = std::min(-lo, hi);
      if (half <= 0.0) return false;
      double scale = 1e-300;
      for (double v : sample_v) scale = std::max(scale, std::abs(v));
      const int probes = 257;
      for (int i = 0; i < probes; ++i) {
        const double x = half * i / (probes - 1);
        if (std::abs(potential(offset + x) - potential(offset - x)) > 1e-10 * scale) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace fewbody
