#pragma once

#include <cstdint>
#include <vector>

#include "csmanet/kv.hpp"
#include "csmanet/phy_mac.hpp"

namespace csmanet::des {

struct Position {
  double x_m = 0.0;
  double y_m = 0.0;
};

struct SimOptions {
  bool record_events = true;       // per-node MAC event log
  bool record_active_sets = true;  // per-interval transmitter sets (needed for
                                   // concurrency histograms)
  bool disable_carrier_sense = false;  // every medium check reads idle
  bool ignore_collisions = false;      // every reception succeeds
};

// A saturated-traffic deployment on a square grid: transmitter i talks to
// its dedicated receiver, offset +5 m/+5 m (mirrored at the grid edge so the
// receiver stays inside).  Aggregate power is tracked at measuring_point.
struct Scenario {
  PhyMacConfig cfg;
  double grid_m = 500.0;
  std::vector<Position> tx_pos;
  std::vector<Position> rx_pos;
  Position measuring_point{250.0, 250.0};
  double duration_us = 0.0;
  std::uint64_t seed = 0;
  SimOptions options;

  int tx_count() const { return static_cast<int>(tx_pos.size()); }
  void validate() const;

  KvMap to_kv() const;
  static Scenario from_kv(const KvMap& kv);
};

// Receiver position for a transmitter: +5/+5 with per-axis mirroring at the
// grid boundary.
Position attach_receiver(Position tx, double grid_m, double offset_m = 5.0);

// Poisson(lambda * grid^2) transmitter count, uniform placement.
Scenario build_poisson_scenario(double lambda, const PhyMacConfig& cfg, double grid_m,
                                double duration_us, std::uint64_t seed);

// Deterministic rows x cols grid with the given spacing, centered on the
// square.
Scenario build_grid_scenario(int rows, int cols, double spacing_m, const PhyMacConfig& cfg,
                             double grid_m, double duration_us, std::uint64_t seed);

// Transmitter indices within `radius_m` of `center` (concurrency-set
// selection helper).
std::vector<int> transmitters_within(const Scenario& s, Position center, double radius_m);

}  // namespace csmanet::des
