#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csmanet/kv.hpp"
#include "csmanet/phy_mac.hpp"
#include "csmanet/point_process.hpp"

namespace csmanet {

// One combination of the swept parameters.
struct SweepPoint {
  double lambda = 0.0;
  double cs_range_m = 0.0;
  int payload_bytes = 0;
  AccessMode mode = AccessMode::Basic;

  std::string tag() const;  // directory-safe label, e.g. lam1e-04_r70_rts_500B
};

// Batch description: a base PHY/MAC parameter set plus sweep lists and the
// Monte Carlo / simulator campaign sizes.
struct ExperimentConfig {
  PhyMacConfig base;  // mode, payload and cs threshold get overridden per point
  std::vector<double> lambdas{1e-4};
  std::vector<double> cs_ranges_m{70.0};
  std::vector<int> payloads_bytes{500};
  std::vector<AccessMode> modes{AccessMode::RtsCts};

  PointProcess process = PointProcess::Ppp;
  std::uint64_t iterations = 100000;
  double region_radius_m = 282.0;
  double exclusion_m = 70.0;

  std::string topology = "poisson";  // or grid:<rows>x<cols>:<spacing_m>
  double grid_m = 500.0;
  double duration_us = 3e6;
  int repetitions = 5;

  std::uint64_t seed = 1;
  int bins_per_decade = 10;
  int law_points = 200;
  int jobs = 0;  // worker threads; 0 picks the hardware count

  void validate() const;
  std::vector<SweepPoint> sweep() const;
  PhyMacConfig config_for(const SweepPoint& point) const;

  KvMap to_kv() const;
  static ExperimentConfig from_kv(const KvMap& kv);
  std::string stamp() const;  // "config_hash=<hex> seed=<n>" comment payload
};

// Command entry points shared by the CLI and the tests.  Each writes CSV
// outputs under out_dir (created if needed) and throws on failure.
void cmd_analyze(const ExperimentConfig& cfg, const std::string& out_dir);
void cmd_sample(const ExperimentConfig& cfg, const std::string& out_dir);
void cmd_des(const ExperimentConfig& cfg, const std::string& out_dir, bool write_traces = false);
void cmd_compare(const ExperimentConfig& cfg, const std::string& out_dir);

// Built-in experiment presets (fig1, fig3, fig4, fig5-6, fig7-8), CI-scaled.
const std::map<std::string, std::string>& builtin_presets();
ExperimentConfig preset_config(const std::string& name);

}  // namespace csmanet
