#include "csmanet/empirical.hpp"

#include <cmath>
#include <stdexcept>

namespace csmanet {

void EmpiricalSample::validate() const {
  if (obs.empty()) throw std::invalid_argument("EmpiricalSample: at least one observation required");
  for (const auto& o : obs) {
    if (!(o.weight > 0)) throw std::invalid_argument("EmpiricalSample: weights must be > 0");
    if (!std::isfinite(o.value_w) || o.value_w < 0)
      throw std::invalid_argument("EmpiricalSample: values must be finite and >= 0");
  }
}

double EmpiricalSample::total_weight() const {
  double w = 0.0;
  for (const auto& o : obs) w += o.weight;
  return w;
}

void EmpiricalSample::append(const EmpiricalSample& other) {
  obs.insert(obs.end(), other.obs.begin(), other.obs.end());
}

EmpiricalCdf empirical_cdf(const EmpiricalSample& sample) {
  sample.validate();
  std::vector<WeightedObservation> sorted = sample.obs;
  std::sort(sorted.begin(), sorted.end(),
            [](const WeightedObservation& a, const WeightedObservation& b) {
              return a.value_w < b.value_w;
            });
  double total = 0.0;
  for (const auto& o : sorted) total += o.weight;
  EmpiricalCdf cdf;
  double cum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cum += sorted[i].weight;
    if (i + 1 < sorted.size() && sorted[i + 1].value_w == sorted[i].value_w) continue;
    cdf.value.push_back(sorted[i].value_w);
    cdf.cum.push_back(cum / total);
  }
  cdf.cum.back() = 1.0;  // guard against rounding in the running sum
  return cdf;
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  double d = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  double fa = 0.0;
  double fb = 0.0;
  while (ia < a.value.size() || ib < b.value.size()) {
    double xa = ia < a.value.size() ? a.value[ia] : INFINITY;
    double xb = ib < b.value.size() ? b.value[ib] : INFINITY;
    if (xa <= xb) fa = a.cum[ia++];
    if (xb <= xa) fb = b.cum[ib++];
    d = std::max(d, std::fabs(fa - fb));
  }
  return d;
}

ZeroAtomSplit split_zero_atom(const EmpiricalSample& sample) {
  sample.validate();
  ZeroAtomSplit out;
  double zero_w = 0.0;
  double total = 0.0;
  for (const auto& o : sample.obs) {
    total += o.weight;
    if (o.value_w == 0.0) {
      zero_w += o.weight;
    } else {
      out.positive.obs.push_back(o);
    }
  }
  out.atom_mass = zero_w / total;
  return out;
}

LogHistogram log_histogram_pdf(const EmpiricalSample& sample, int bins_per_decade, double lo_w,
                               double hi_w) {
  sample.validate();
  if (bins_per_decade < 1) throw std::invalid_argument("log_histogram_pdf: bins_per_decade must be >= 1");
  ZeroAtomSplit split = split_zero_atom(sample);
  LogHistogram hist;
  hist.zero_atom_mass = split.atom_mass;
  if (split.positive.obs.empty()) return hist;

  double lo = lo_w;
  double hi = hi_w;
  if (lo == 0.0 && hi == 0.0) {
    lo = hi = split.positive.obs.front().value_w;
    for (const auto& o : split.positive.obs) {
      lo = std::min(lo, o.value_w);
      hi = std::max(hi, o.value_w);
    }
    // a single distinct value still needs one full-width bin
    hi = std::max(std::nextafter(hi, INFINITY), lo * std::pow(10.0, 1.0 / bins_per_decade));
  }
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log_histogram_pdf: range must be positive");

  double log_lo = std::log10(lo);
  double log_hi = std::log10(hi);
  int bin_count = std::max(1, static_cast<int>(std::ceil((log_hi - log_lo) * bins_per_decade)));
  double step = (log_hi - log_lo) / bin_count;

  std::vector<double> weight(bin_count, 0.0);
  double total = sample.total_weight();
  for (const auto& o : split.positive.obs) {
    if (o.value_w < lo || o.value_w >= hi) {
      if (o.value_w == hi) continue;  // nextafter boundary
      throw std::invalid_argument("log_histogram_pdf: observation outside the requested range");
    }
    int bin = static_cast<int>((std::log10(o.value_w) - log_lo) / step);
    bin = std::clamp(bin, 0, bin_count - 1);
    weight[bin] += o.weight;
  }
  hist.bins.resize(bin_count);
  for (int b = 0; b < bin_count; ++b) {
    double left = std::pow(10.0, log_lo + b * step);
    double right = std::pow(10.0, log_lo + (b + 1) * step);
    hist.bins[b] = {left, right, weight[b] / total / (right - left)};
  }
  return hist;
}

}  // namespace csmanet
