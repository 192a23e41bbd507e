#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csmanet/empirical.hpp"

namespace csmanet {

enum class PointProcess { Ppp, Mhc, Ssi };

std::string to_string(PointProcess p);
PointProcess point_process_from_string(const std::string& s);

// A planar pattern on a disk centered at the origin.  Each point carries its
// Rayleigh-faded transmit power in watts.
struct MarkedPoint {
  double x_m = 0.0;
  double y_m = 0.0;
  double mark_w = 0.0;
};

struct PointPattern {
  std::vector<MarkedPoint> points;
  double region_radius_m = 0.0;
};

struct MonteCarloConfig {
  PointProcess process = PointProcess::Ppp;
  double lambda = 0.0;          // nodes/m^2
  double exclusion_m = 0.0;     // hardcore radius; 0 degenerates MHC/SSI to PPP
  double region_radius_m = 0.0;
  double tx_power_w = 1e-3;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

// One pattern draw for iteration `index` of the configured campaign.  The
// three processes consume the iteration substream identically: the PPP
// candidates double as the MHC/SSI candidate list (candidate order plays the
// role of the type-II time mark), so for a fixed (seed, index) the retained
// sets are nested, MHC subset of SSI subset of PPP.
PointPattern sample_ppp(const MonteCarloConfig& cfg, std::uint64_t index);
PointPattern sample_mhc(const MonteCarloConfig& cfg, std::uint64_t index);
PointPattern sample_ssi(const MonteCarloConfig& cfg, std::uint64_t index);

// Shot-noise sum mark / d^4 over the pattern, measured at `(x, y)`.
// Distances below 1e-6 m are rejected (the samplers re-draw such points).
double measure_aggregate(const PointPattern& pattern, double x_m = 0.0, double y_m = 0.0);

// Runs the configured process for `iterations` draws and returns unit-weight
// aggregate-power samples.  Deterministic for a fixed config.
EmpiricalSample monte_carlo_interference(const MonteCarloConfig& cfg);

}  // namespace csmanet
