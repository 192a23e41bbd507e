#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace csmanet {

// One observation of aggregate power.  The weight is a dwell time in
// microseconds for simulator output and 1 for Monte Carlo draws.
struct WeightedObservation {
  double value_w = 0.0;
  double weight = 0.0;
};

struct EmpiricalSample {
  std::vector<WeightedObservation> obs;

  void validate() const;  // throws on empty sample or nonpositive weight
  double total_weight() const;
  void append(const EmpiricalSample& other);
};

// Right-continuous weighted step CDF.
struct EmpiricalCdf {
  std::vector<double> value;  // strictly increasing breakpoints
  std::vector<double> cum;    // cumulative normalized weight, cum.back() == 1

  double operator()(double x) const {
    auto it = std::upper_bound(value.begin(), value.end(), x);
    if (it == value.begin()) return 0.0;
    return cum[static_cast<std::size_t>(it - value.begin()) - 1];
  }
};

EmpiricalCdf empirical_cdf(const EmpiricalSample& sample);

// Sup distance between two step CDFs, evaluated over the union of their
// breakpoints.
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

// Sup distance against a continuous CDF; both one-sided gaps at every
// breakpoint are considered.
template <class CdfFn>
double ks_distance_vs_cdf(const EmpiricalCdf& ecdf, CdfFn&& cdf) {
  double d = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < ecdf.value.size(); ++i) {
    double f = cdf(ecdf.value[i]);
    d = std::max(d, std::fabs(ecdf.cum[i] - f));
    d = std::max(d, std::fabs(prev - f));
    prev = ecdf.cum[i];
  }
  return d;
}

// The simulator legitimately spends time with nothing on the air, which the
// continuous law cannot represent; comparisons pull the exact-zero mass out
// and renormalize the rest, reporting the atom separately.
struct ZeroAtomSplit {
  EmpiricalSample positive;
  double atom_mass = 0.0;  // weight fraction at exactly zero
};

ZeroAtomSplit split_zero_atom(const EmpiricalSample& sample);

struct LogHistogramBin {
  double left = 0.0;
  double right = 0.0;
  double density = 0.0;  // per watt
};

struct LogHistogram {
  double zero_atom_mass = 0.0;
  std::vector<LogHistogramBin> bins;
};

// Weight-normalized density over log-spaced bins; integrates to
// 1 - zero_atom_mass.  Bounds 0 request auto-ranging from the data; explicit
// bounds must cover every positive observation.
LogHistogram log_histogram_pdf(const EmpiricalSample& sample, int bins_per_decade,
                               double lo_w = 0.0, double hi_w = 0.0);

}  // namespace csmanet
