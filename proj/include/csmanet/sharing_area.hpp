#pragma once

#include <vector>

#include "csmanet/phy_mac.hpp"
#include "csmanet/sector_model.hpp"

namespace csmanet {

// Self-consistent solution of the sharing-area busy probability.
struct POnSolution {
  double p_on = 0.0;
  double residual = 0.0;  // |rhs(p_on) - p_on| after the solve
  bool bracketed = true;  // false when no sign change existed in [0, 1]
};

// Everything the effective-density derivation produces for one
// (lambda, config) pair.
struct SharingAreaAnalysis {
  double lambda_init = 0.0;  // deployed node density, nodes/m^2
  double cs_range_m = 0.0;
  double p_on_star = 0.0;
  std::vector<double> z_pmf;  // P[Z = z], transmitting-node count
  double e_z = 0.0;
  double lambda_eff = 0.0;  // effective active node density, nodes/m^2
  bool p_on_bracketed = true;

  KvMap to_kv() const;
};

// Busy probability fixed point: the occupancy the sharing area induces on
// itself, averaged over the Poisson node count, the sector-model activation
// and the per-count steady-state power distribution.  Solved by bisection;
// rhs(0) > 0 and rhs(1) = 0, so a root always exists for lambda > 0.
POnSolution solve_p_on(double lambda, const PhyMacConfig& cfg,
                       const SectorModel& model = SectorModel::idle_fraction_default(),
                       double tail = 1e-12);

// P[Z = z] for the number of nodes actually on the air at a random instant.
std::vector<double> tx_count_distribution(double lambda, const PhyMacConfig& cfg, double p_on_star,
                                          const SectorModel& model = SectorModel::idle_fraction_default(),
                                          double tail = 1e-12);

double expected_tx_count(const std::vector<double>& z_pmf);

// lambda' = E[Z] / (pi (R/2)^2).
double effective_density(const SharingAreaAnalysis& analysis);

SharingAreaAnalysis analyze_sharing_area(double lambda, const PhyMacConfig& cfg,
                                         const SectorModel& model = SectorModel::idle_fraction_default(),
                                         double tail = 1e-12);

// Closed-form retained density of a hardcore thinning with exclusion
// distance D: (1 - exp(-lambda pi D^2)) / (pi D^2).  Comparison baseline.
double mhc_density_baseline(double lambda, double exclusion_m);

}  // namespace csmanet
