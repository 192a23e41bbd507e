#include "csmanet/des/trace.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "csmanet/kv.hpp"

namespace csmanet::des {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::TxStart: return "tx_start";
    case EventKind::TxEnd: return "tx_end";
    case EventKind::BackoffFreeze: return "backoff_freeze";
    case EventKind::BackoffResume: return "backoff_resume";
    case EventKind::Success: return "success";
    case EventKind::Collision: return "collision";
    case EventKind::RetryDrop: return "retry_drop";
  }
  return "?";
}

void DesTrace::write_events_csv(const std::string& path, const std::string& header_comment) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  out << "time_us,node_id,event\n";
  for (const TraceEvent& e : events) {
    out << format_double(e.time_us) << ',' << e.node << ',' << to_string(e.kind) << "\n";
  }
}

std::pair<double, double> time_window(const DesTrace& trace) {
  if (trace.node_stats.empty()) throw std::invalid_argument("time_window: no transmitters");
  double start = 0.0;
  double end = trace.duration_us;
  for (int i = 0; i < trace.tx_count; ++i) {
    const NodeStats& st = trace.node_stats[i];
    if (st.first_tx_start_us < 0 || st.last_tx_end_us < 0)
      throw std::runtime_error("time_window: node " + std::to_string(i) + " never transmitted");
    start = std::max(start, st.first_tx_start_us);
    end = std::min(end, st.last_tx_end_us);
  }
  if (!(start < end)) throw std::runtime_error("time_window: degenerate window");
  return {start, end};
}

EmpiricalSample trace_to_samples(const DesTrace& trace, std::pair<double, double> window) {
  auto [w0, w1] = window;
  if (!(w0 < w1)) throw std::invalid_argument("trace_to_samples: empty window");
  EmpiricalSample sample;
  for (std::size_t i = 0; i < trace.intervals.size(); ++i) {
    double begin = trace.intervals[i].begin_us;
    double end = i + 1 < trace.intervals.size() ? trace.intervals[i + 1].begin_us : trace.duration_us;
    double lo = std::max(begin, w0);
    double hi = std::min(end, w1);
    if (!(lo < hi)) continue;
    double value = trace.intervals[i].aggregate_w;
    if (!sample.obs.empty() && sample.obs.back().value_w == value) {
      sample.obs.back().weight += hi - lo;  // merge equal-power neighbours
    } else {
      sample.obs.push_back({value, hi - lo});
    }
  }
  return sample;
}

std::vector<double> concurrent_tx_histogram(const DesTrace& trace, const std::vector<int>& subset,
                                            std::pair<double, double> window) {
  auto [w0, w1] = window;
  if (!(w0 < w1)) throw std::invalid_argument("concurrent_tx_histogram: empty window");
  std::vector<char> member(trace.tx_count, 0);
  for (int id : subset) {
    if (id < 0 || id >= trace.tx_count)
      throw std::invalid_argument("concurrent_tx_histogram: subset id out of range");
    member[id] = 1;
  }
  std::vector<double> hist(subset.size() + 1, 0.0);
  for (std::size_t i = 0; i < trace.intervals.size(); ++i) {
    double begin = trace.intervals[i].begin_us;
    double end = i + 1 < trace.intervals.size() ? trace.intervals[i + 1].begin_us : trace.duration_us;
    double lo = std::max(begin, w0);
    double hi = std::min(end, w1);
    if (!(lo < hi)) continue;
    std::size_t level = 0;
    for (std::uint16_t id : trace.intervals[i].active_tx) {
      if (id < member.size() && member[id]) ++level;
    }
    if (level >= hist.size()) level = hist.size() - 1;
    hist[level] += hi - lo;
  }
  double total = w1 - w0;
  for (double& h : hist) h /= total;
  return hist;
}

}  // namespace csmanet::des
