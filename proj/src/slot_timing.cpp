#include "csmanet/slot_timing.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/dcf.hpp"
#include "csmanet/special.hpp"

namespace csmanet {

SlotDurations slot_durations(const PhyMacConfig& cfg) {
  cfg.validate();
  SlotDurations s;
  s.idle_us = cfg.slot_us;
  double symbols = std::ceil((cfg.mac_header_bits + cfg.payload_bits) / cfg.symbol_rate);
  s.ppdu_us = cfg.phy_header_us + symbols * cfg.symbol_us;
  if (cfg.mode == AccessMode::Basic) {
    s.success_us = s.ppdu_us + cfg.sifs_us + cfg.ack_us + cfg.difs_us;
    s.collision_us = s.ppdu_us + cfg.difs_us;
    s.success_quiet_us = cfg.sifs_us + cfg.difs_us;
    s.success_single_us = s.ppdu_us + cfg.ack_us;
    s.collision_quiet_us = cfg.difs_us;
    s.collision_multi_us = s.ppdu_us;
  } else {
    s.success_us = cfg.rts_us + cfg.cts_us + s.ppdu_us + 3.0 * cfg.sifs_us + cfg.ack_us + cfg.difs_us;
    s.collision_us = cfg.rts_us + cfg.difs_us;
    s.success_quiet_us = 3.0 * cfg.sifs_us + cfg.difs_us;
    s.success_single_us = cfg.rts_us + cfg.cts_us + s.ppdu_us + cfg.ack_us;
    s.collision_quiet_us = cfg.difs_us;
    s.collision_multi_us = cfg.rts_us;
  }
  return s;
}

KvMap SlotDurations::to_kv() const {
  KvMap kv;
  kv.set("idle_us", idle_us);
  kv.set("success_us", success_us);
  kv.set("collision_us", collision_us);
  kv.set("ppdu_us", ppdu_us);
  kv.set("success_quiet_us", success_quiet_us);
  kv.set("success_single_us", success_single_us);
  kv.set("collision_quiet_us", collision_quiet_us);
  kv.set("collision_multi_us", collision_multi_us);
  return kv;
}

double mean_virtual_slot(int active_count, double tau, const SlotDurations& slots) {
  if (active_count < 1) throw std::invalid_argument("mean_virtual_slot: active_count must be >= 1");
  std::vector<double> p = concurrent_tx_pmf(active_count, tau);
  double p0 = p[0];
  double p1 = active_count >= 1 ? p[1] : 0.0;
  return slots.idle_us * p0 + slots.success_us * p1 +
         slots.collision_us * (1.0 - p0 - p1);
}

std::vector<double> power_distribution(int active_count, double tau, const SlotDurations& slots) {
  if (active_count < 1) throw std::invalid_argument("power_distribution: active_count must be >= 1");
  std::vector<double> p = concurrent_tx_pmf(active_count, tau);
  double p0 = p[0];
  double p1 = p[1];
  double p_coll = 1.0 - p0 - p1;
  double mean_slot = slots.idle_us * p0 + slots.success_us * p1 + slots.collision_us * p_coll;
  std::vector<double> b(active_count + 1, 0.0);
  b[0] = (slots.idle_us * p0 + slots.success_quiet_us * p1 + slots.collision_quiet_us * p_coll) /
         mean_slot;
  b[1] = slots.success_single_us * p1 / mean_slot;
  for (int j = 2; j <= active_count; ++j) {
    b[j] = slots.collision_multi_us * p[j] / mean_slot;
  }
  return b;
}

std::vector<double> power_distribution(int active_count, const PhyMacConfig& cfg) {
  DcfFixedPoint fp = solve_dcf(active_count, cfg);
  return power_distribution(active_count, fp.tau, slot_durations(cfg));
}

}  // namespace csmanet
