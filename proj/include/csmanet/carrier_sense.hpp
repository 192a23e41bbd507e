#pragma once

#include <vector>

#include "csmanet/phy_mac.hpp"

namespace csmanet {

// Probability that a single Rayleigh-faded interferer at the given distance
// renders the channel busy: exp(-(gamma - nu) r^4 / p).
double cs_busy_probability(double distance_m, const PhyMacConfig& cfg);

// Expected busy-detection area, integrating the busy probability over the
// plane: pi^(3/2) / (2 sqrt((gamma - nu)/p)).
double mean_sensing_area(const PhyMacConfig& cfg);

// Deterministic carrier-sense radius whose disk matches the mean sensing
// area: R = (1/sqrt(2)) (pi p / (gamma - nu))^(1/4).
double effective_cs_range(const PhyMacConfig& cfg);

// Mean node count of the sharing area (the disk of radius R/2).
double sharing_area_mean(double lambda, double cs_range_m);

// Poisson PMF of the deployed node count in the sharing area.
double sharing_count_pmf(double lambda, double cs_range_m, int n);
std::vector<double> sharing_count_pmf_table(double lambda, double cs_range_m, double tail = 1e-12);

}  // namespace csmanet
