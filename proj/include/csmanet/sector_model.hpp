#pragma once

#include <array>
#include <vector>

namespace csmanet {

// Spatially quantized activation model for nodes inside a sharing area.
// A node's surrounding sensing region is split into `kSectors` sectors; each
// sector is independently busy with probability p_on, and a node is active
// with probability (idle sectors / kSectors).  `weight[eta][d]` maps the
// number of busy sector draws d to the probability weight of ending up with
// eta idle sectors; the default puts weight C(8, d) on eta = 8 - d, so the
// idle-sector count is Binomial(8, 1 - p_on).  The table is pluggable:
// alternative conventions only need to keep every column summing to C(8, d)
// so that the eta distribution stays normalized for every p_on.
struct SectorModel {
  static constexpr int kSectors = 8;
  std::array<std::array<double, kSectors + 1>, kSectors + 1> weight{};

  static SectorModel idle_fraction_default();

  void validate() const;  // throws on negative weights or broken normalization

  // P[eta idle sectors] for eta = 0..8.
  std::array<double, kSectors + 1> idle_sector_pmf(double p_on) const;
};

// P[N_a = a | N = n] for a = 0..n given the sharing-area busy probability.
std::vector<double> active_node_pmf(int n, double p_on, const SectorModel& model);

}  // namespace csmanet
