#pragma once

#include <vector>

#include "csmanet/phy_mac.hpp"

namespace csmanet {

// Durations of the three virtual-slot types and the transmit/quiet
// sub-intervals inside them.  A successful slot is quiet (SIFS gaps plus the
// trailing DIFS) except while the data exchange or its acknowledgement is on
// the air; a collision slot is quiet only during the trailing DIFS.
struct SlotDurations {
  double idle_us = 0.0;             // sigma
  double success_us = 0.0;          // T_s for the configured mode
  double collision_us = 0.0;        // T_c for the configured mode
  double ppdu_us = 0.0;             // PHY header + payload symbols
  double success_quiet_us = 0.0;    // nobody-on-air share of a success slot
  double success_single_us = 0.0;   // exactly-one-transmitter share of a success slot
  double collision_quiet_us = 0.0;  // nobody-on-air share of a collision slot
  double collision_multi_us = 0.0;  // all-colliders-on-air share of a collision slot

  KvMap to_kv() const;
};

SlotDurations slot_durations(const PhyMacConfig& cfg);

// E[T_v] = sigma p(0) + T_s p(1) + T_c (1 - p(0) - p(1)) with
// p = Binomial(active_count, tau).
double mean_virtual_slot(int active_count, double tau, const SlotDurations& slots);

// Time-weighted PMF of the number of simultaneous transmitters in the
// sharing area, indices 0..active_count.
std::vector<double> power_distribution(int active_count, double tau, const SlotDurations& slots);
std::vector<double> power_distribution(int active_count, const PhyMacConfig& cfg);

}  // namespace csmanet
