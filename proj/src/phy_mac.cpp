#include "csmanet/phy_mac.hpp"

#include <cmath>
#include <stdexcept>

namespace csmanet {

std::string to_string(AccessMode mode) { return mode == AccessMode::Basic ? "basic" : "rts"; }

AccessMode access_mode_from_string(const std::string& s) {
  if (s == "basic") return AccessMode::Basic;
  if (s == "rts" || s == "rtscts" || s == "rts-cts") return AccessMode::RtsCts;
  throw std::invalid_argument("unknown access mode: " + s);
}

void PhyMacConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("PhyMacConfig: ") + what);
  };
  require(tx_power_w > 0, "tx_power_w must be > 0");
  require(noise_w > 0, "noise_w must be > 0");
  require(cs_threshold_w > noise_w, "cs_threshold_w must exceed noise_w");
  require(path_loss_exponent == 4.0, "path_loss_exponent must be 4");
  require(slot_us > 0, "slot_us must be > 0");
  require(sifs_us > 0, "sifs_us must be > 0");
  require(difs_us > 0, "difs_us must be > 0");
  require(phy_header_us > 0, "phy_header_us must be > 0");
  require(mac_header_bits > 0, "mac_header_bits must be > 0");
  require(payload_bits >= 0, "payload_bits must be >= 0");
  require(symbol_rate > 0, "symbol_rate must be > 0");
  require(symbol_us > 0, "symbol_us must be > 0");
  require(rts_us > 0 && cts_us > 0 && ack_us > 0, "control frame durations must be > 0");
  require(w0 >= 3, "w0 must be >= 3 (w0 = 2 would give tau > 1)");
  require(max_backoff_stage >= 0, "max_backoff_stage must be >= 0");
  // The published constraint is retry_limit >= max_backoff_stage + 2, but the
  // 802.11a defaults themselves (m = 6, short retry 7) violate it; >= m + 1
  // keeps every doubling stage reachable, which is all the window sum needs.
  require(retry_limit >= max_backoff_stage + 1, "retry_limit must be >= max_backoff_stage + 1");
  require(long_retry_limit >= 1, "long_retry_limit must be >= 1");
}

KvMap PhyMacConfig::to_kv() const {
  KvMap kv;
  kv.set("tx_power_w", tx_power_w);
  kv.set("noise_w", noise_w);
  kv.set("cs_threshold_w", cs_threshold_w);
  kv.set("path_loss_exponent", path_loss_exponent);
  kv.set("slot_us", slot_us);
  kv.set("sifs_us", sifs_us);
  kv.set("difs_us", difs_us);
  kv.set("phy_header_us", phy_header_us);
  kv.set("mac_header_bits", static_cast<long long>(mac_header_bits));
  kv.set("payload_bits", static_cast<long long>(payload_bits));
  kv.set("symbol_rate", symbol_rate);
  kv.set("symbol_us", symbol_us);
  kv.set("rts_us", rts_us);
  kv.set("cts_us", cts_us);
  kv.set("ack_us", ack_us);
  kv.set("w0", static_cast<long long>(w0));
  kv.set("max_backoff_stage", static_cast<long long>(max_backoff_stage));
  kv.set("retry_limit", static_cast<long long>(retry_limit));
  kv.set("long_retry_limit", static_cast<long long>(long_retry_limit));
  kv.set("mode", to_string(mode));
  return kv;
}

PhyMacConfig PhyMacConfig::from_kv(const KvMap& kv) {
  PhyMacConfig c;
  c.tx_power_w = kv.get_double_or("tx_power_w", c.tx_power_w);
  c.noise_w = kv.get_double_or("noise_w", c.noise_w);
  c.cs_threshold_w = kv.get_double_or("cs_threshold_w", c.cs_threshold_w);
  c.path_loss_exponent = kv.get_double_or("path_loss_exponent", c.path_loss_exponent);
  c.slot_us = kv.get_double_or("slot_us", c.slot_us);
  c.sifs_us = kv.get_double_or("sifs_us", c.sifs_us);
  c.difs_us = kv.get_double_or("difs_us", c.difs_us);
  c.phy_header_us = kv.get_double_or("phy_header_us", c.phy_header_us);
  c.mac_header_bits = static_cast<int>(kv.get_int_or("mac_header_bits", c.mac_header_bits));
  c.payload_bits = static_cast<int>(kv.get_int_or("payload_bits", c.payload_bits));
  c.symbol_rate = kv.get_double_or("symbol_rate", c.symbol_rate);
  c.symbol_us = kv.get_double_or("symbol_us", c.symbol_us);
  c.rts_us = kv.get_double_or("rts_us", c.rts_us);
  c.cts_us = kv.get_double_or("cts_us", c.cts_us);
  c.ack_us = kv.get_double_or("ack_us", c.ack_us);
  c.w0 = static_cast<int>(kv.get_int_or("w0", c.w0));
  c.max_backoff_stage = static_cast<int>(kv.get_int_or("max_backoff_stage", c.max_backoff_stage));
  c.retry_limit = static_cast<int>(kv.get_int_or("retry_limit", c.retry_limit));
  c.long_retry_limit = static_cast<int>(kv.get_int_or("long_retry_limit", c.long_retry_limit));
  if (kv.contains("mode")) c.mode = access_mode_from_string(kv.get("mode"));
  return c;
}

double cs_threshold_for_range(double range_m, double tx_power_w, double noise_w) {
  if (!(range_m > 0)) throw std::invalid_argument("cs_threshold_for_range: range must be > 0");
  // Inverts range = (1/sqrt(2)) * (pi p / (gamma - nu))^(1/4).
  double r4 = range_m * range_m * range_m * range_m;
  return noise_w + M_PI * tx_power_w / (4.0 * r4);
}

PhyMacConfig ieee80211a_config(AccessMode mode, int payload_bytes, double cs_range_m) {
  PhyMacConfig c;
  c.mode = mode;
  c.payload_bits = payload_bytes * 8;
  c.cs_threshold_w = cs_threshold_for_range(cs_range_m, c.tx_power_w, c.noise_w);
  c.validate();
  return c;
}

}  // namespace csmanet
