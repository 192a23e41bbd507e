#pragma once

#include <string>

#include "csmanet/kv.hpp"

namespace csmanet {

enum class AccessMode { Basic, RtsCts };

std::string to_string(AccessMode mode);
AccessMode access_mode_from_string(const std::string& s);

// Every PHY/MAC/channel constant the analysis and the simulator consume.
// Units are fixed repo-wide: watts, meters, microseconds.
struct PhyMacConfig {
  double tx_power_w = 1e-3;        // constant transmit power
  double noise_w = 1e-12;          // receiver noise floor
  double cs_threshold_w = 0.0;     // carrier-sense busy threshold; must exceed noise_w
  double path_loss_exponent = 4.0; // only 4 is supported by the closed forms
  double slot_us = 9.0;
  double sifs_us = 16.0;
  double difs_us = 34.0;
  double phy_header_us = 20.0;     // PLCP header portion preceding the payload symbols
  int mac_header_bits = 246;       // MAC header + FCS + service/tail bits
  int payload_bits = 4000;
  double symbol_rate = 24.0;       // data bits carried per OFDM symbol
  double symbol_us = 4.0;
  double rts_us = 52.0;
  double cts_us = 44.0;
  double ack_us = 44.0;
  int w0 = 16;                     // initial contention window size
  int max_backoff_stage = 6;       // window doubles up to 2^m * w0
  int retry_limit = 7;             // attempts before the frame is dropped
  int long_retry_limit = 4;        // applies to RTS-protected data frames (simulator only)
  AccessMode mode = AccessMode::Basic;

  void validate() const;  // throws std::invalid_argument on violation

  KvMap to_kv() const;
  static PhyMacConfig from_kv(const KvMap& kv);
};

// Carrier-sense threshold that yields the requested effective range.
double cs_threshold_for_range(double range_m, double tx_power_w, double noise_w);

// IEEE 802.11a defaults (6 Mbps data frames) with the carrier-sense
// threshold tuned for the requested effective range.
PhyMacConfig ieee80211a_config(AccessMode mode, int payload_bytes = 500,
                               double cs_range_m = 70.0);

}  // namespace csmanet
