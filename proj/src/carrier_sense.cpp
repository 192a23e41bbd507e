#include "csmanet/carrier_sense.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/special.hpp"

namespace csmanet {

double cs_busy_probability(double distance_m, const PhyMacConfig& cfg) {
  cfg.validate();
  if (!(distance_m > 0)) throw std::invalid_argument("cs_busy_probability: distance must be > 0");
  double r2 = distance_m * distance_m;
  return std::exp(-(cfg.cs_threshold_w - cfg.noise_w) * r2 * r2 / cfg.tx_power_w);
}

double mean_sensing_area(const PhyMacConfig& cfg) {
  cfg.validate();
  double beta = (cfg.cs_threshold_w - cfg.noise_w) / cfg.tx_power_w;
  return std::pow(M_PI, 1.5) / (2.0 * std::sqrt(beta));
}

double effective_cs_range(const PhyMacConfig& cfg) {
  cfg.validate();
  double ratio = M_PI * cfg.tx_power_w / (cfg.cs_threshold_w - cfg.noise_w);
  return std::pow(ratio, 0.25) / std::sqrt(2.0);
}

double sharing_area_mean(double lambda, double cs_range_m) {
  if (!(lambda > 0)) throw std::invalid_argument("sharing_area_mean: lambda must be > 0");
  if (!(cs_range_m > 0)) throw std::invalid_argument("sharing_area_mean: range must be > 0");
  double half = cs_range_m / 2.0;
  return lambda * M_PI * half * half;
}

double sharing_count_pmf(double lambda, double cs_range_m, int n) {
  if (n < 0) throw std::invalid_argument("sharing_count_pmf: n must be >= 0");
  double mu = sharing_area_mean(lambda, cs_range_m);
  double term = std::exp(-mu);
  for (int k = 1; k <= n; ++k) term *= mu / k;
  return term;
}

std::vector<double> sharing_count_pmf_table(double lambda, double cs_range_m, double tail) {
  return poisson_pmf_table(sharing_area_mean(lambda, cs_range_m), tail);
}

}  // namespace csmanet
