#include "csmanet/sector_model.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/special.hpp"

namespace csmanet {

SectorModel SectorModel::idle_fraction_default() {
  SectorModel m;
  for (int d = 0; d <= kSectors; ++d) {
    m.weight[kSectors - d][d] = binomial_coefficient(kSectors, d);
  }
  return m;
}

std::array<double, SectorModel::kSectors + 1> SectorModel::idle_sector_pmf(double p_on) const {
  if (!(p_on >= 0.0 && p_on <= 1.0)) throw std::domain_error("idle_sector_pmf: p_on must be in [0, 1]");
  std::array<double, kSectors + 1> pmf{};
  for (int eta = 0; eta <= kSectors; ++eta) {
    double sum = 0.0;
    for (int d = 0; d <= kSectors; ++d) {
      if (weight[eta][d] == 0.0) continue;
      sum += weight[eta][d] * std::pow(p_on, d) * std::pow(1.0 - p_on, kSectors - d);
    }
    pmf[eta] = sum;
  }
  return pmf;
}

void SectorModel::validate() const {
  for (int eta = 0; eta <= kSectors; ++eta) {
    for (int d = 0; d <= kSectors; ++d) {
      if (weight[eta][d] < 0.0) throw std::invalid_argument("SectorModel: negative weight");
    }
  }
  for (double p_on : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    auto pmf = idle_sector_pmf(p_on);
    double sum = 0.0;
    for (double v : pmf) sum += v;
    if (std::fabs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("SectorModel: idle-sector distribution not normalized");
  }
}

std::vector<double> active_node_pmf(int n, double p_on, const SectorModel& model) {
  if (n < 0) throw std::invalid_argument("active_node_pmf: n must be >= 0");
  model.validate();
  auto eta_pmf = model.idle_sector_pmf(p_on);
  std::vector<double> out(n + 1, 0.0);
  for (int eta = 0; eta <= SectorModel::kSectors; ++eta) {
    if (eta_pmf[eta] == 0.0) continue;
    double q = static_cast<double>(eta) / SectorModel::kSectors;
    std::vector<double> bin = binomial_pmf(n, q);
    for (int a = 0; a <= n; ++a) out[a] += eta_pmf[eta] * bin[a];
  }
  return out;
}

}  // namespace csmanet
