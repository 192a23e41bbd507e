#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csmanet/empirical.hpp"

namespace csmanet::des {

enum class EventKind : std::uint8_t {
  TxStart,
  TxEnd,
  BackoffFreeze,
  BackoffResume,
  Success,
  Collision,
  RetryDrop,
};

std::string to_string(EventKind kind);

struct TraceEvent {
  double time_us = 0.0;
  std::uint16_t node = 0;
  EventKind kind = EventKind::TxStart;
  double mark_w = 0.0;  // faded transmit power for TxStart, 0 otherwise
};

// Aggregate power at the measuring point is piecewise constant between
// transmission boundaries; one record per piece.
struct PowerInterval {
  double begin_us = 0.0;
  double aggregate_w = 0.0;
  std::vector<std::uint16_t> active_tx;  // transmitting node ids, recorded on request
};

struct NodeStats {
  double first_tx_start_us = -1.0;
  double last_tx_end_us = -1.0;
  std::uint64_t attempts = 0;
  std::uint64_t successes = 0;
  std::uint64_t collisions = 0;  // failed attempts of any phase
  std::uint64_t drops = 0;
};

struct DesTrace {
  double duration_us = 0.0;
  int tx_count = 0;
  std::vector<TraceEvent> events;        // populated when event recording is on
  std::vector<PowerInterval> intervals;  // always populated; last piece ends at duration_us
  std::vector<NodeStats> node_stats;     // one entry per transmitter
  std::uint64_t processed_events = 0;

  void write_events_csv(const std::string& path, const std::string& header_comment) const;
};

// Measurement window: latest first transmission to earliest last
// transmission over the transmitter nodes.  Throws when a node never
// transmitted or the window is empty.
std::pair<double, double> time_window(const DesTrace& trace);

// Dwell-weighted aggregate-power samples restricted to the window; weights
// sum to the window length.  Idle stretches come out as zero-valued samples.
EmpiricalSample trace_to_samples(const DesTrace& trace, std::pair<double, double> window);

// Time fraction per concurrency level |active transmitters in subset|,
// index 0..subset.size(); fractions sum to 1.  Requires recorded active
// sets.
std::vector<double> concurrent_tx_histogram(const DesTrace& trace, const std::vector<int>& subset,
                                            std::pair<double, double> window);

}  // namespace csmanet::des
