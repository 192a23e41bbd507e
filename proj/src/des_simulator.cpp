#include "csmanet/des/simulator.hpp"

#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "csmanet/rng.hpp"
#include "csmanet/slot_timing.hpp"

namespace csmanet::des {

namespace {

enum class FrameKind : std::uint8_t { Rts, Cts, Data, Ack };

struct Flight {
  std::uint64_t id = 0;
  FrameKind kind = FrameKind::Data;
  int src = 0;    // node id (transmitter 0..N-1, receiver N..2N-1)
  int dest = 0;   // node id
  int owner = 0;  // transmitter index owning the exchange
  double end_us = 0.0;
  double mark_w = 0.0;
  bool corrupted = false;
};

struct Event {
  double time_us = 0.0;
  int prio = 0;  // TxEnd 0, DifsDone 1, CountZero 2, FrameStart 3
  std::uint64_t seq = 0;
  enum Type : std::uint8_t { TxEnd, DifsDone, CountZero, FrameStart } type = TxEnd;
  std::uint64_t a = 0;       // frame id / node index
  std::uint64_t epoch = 0;   // timer validity tag
  FrameKind kind = FrameKind::Data;
  int src = 0;
  int dest = 0;
  int owner = 0;
  double duration_us = 0.0;
};

struct EventAfter {
  bool operator()(const Event& x, const Event& y) const {
    if (x.time_us != y.time_us) return x.time_us > y.time_us;
    if (x.prio != y.prio) return x.prio > y.prio;
    return x.seq > y.seq;
  }
};

enum class Phase : std::uint8_t { WaitIdle, Difs, Count, Tx };

struct TxState {
  Phase phase = Phase::WaitIdle;
  int counter = 0;           // residual backoff slots
  int failures = 0;          // failures of the current packet, drives the window
  int short_fail = 0;
  int long_fail = 0;
  double countdown_base_us = 0.0;
  std::uint64_t epoch = 0;   // bumping it invalidates pending timers
};

class Simulator {
 public:
  explicit Simulator(const Scenario& sc) : sc_(sc), slots_(slot_durations(sc.cfg)) {
    sc_.validate();
    n_tx_ = sc_.tx_count();
    n_nodes_ = 2 * n_tx_;
    rng_ = make_engine(sc_.seed, 1);
    build_geometry();
    nodes_.resize(n_tx_);
    sensed_sum_.assign(n_tx_, 0.0);
    trace_.duration_us = sc_.duration_us;
    trace_.tx_count = n_tx_;
    trace_.node_stats.resize(n_tx_);
    threshold_gap_w_ = sc_.cfg.cs_threshold_w - sc_.cfg.noise_w;
  }

  DesTrace run() {
    for (int i = 0; i < n_tx_; ++i) {
      nodes_[i].counter = draw_counter(0);
      nodes_[i].phase = Phase::WaitIdle;
    }
    record_interval(0.0);
    reevaluate(0.0);

    double now = 0.0;
    while (!queue_.empty() && queue_.top().time_us <= sc_.duration_us) {
      now = queue_.top().time_us;
      flight_changed_ = false;
      needs_reeval_ = false;
      while (!queue_.empty() && queue_.top().time_us == now) {
        Event ev = queue_.top();
        queue_.pop();
        dispatch(ev, now);
        if (++trace_.processed_events > 400'000'000ull)
          throw std::runtime_error("run_des: event budget exceeded (non-progress?)");
      }
      if (flight_changed_) record_interval(now);
      if (flight_changed_ || needs_reeval_) reevaluate(now);
    }
    return std::move(trace_);
  }

 private:
  void build_geometry() {
    auto pos = [&](int node) -> Position {
      return node < n_tx_ ? sc_.tx_pos[node] : sc_.rx_pos[node - n_tx_];
    };
    inv_d4_.assign(n_nodes_, std::vector<double>(n_nodes_, 0.0));
    for (int i = 0; i < n_nodes_; ++i) {
      for (int j = 0; j < n_nodes_; ++j) {
        if (i == j) continue;
        double dx = pos(i).x_m - pos(j).x_m;
        double dy = pos(i).y_m - pos(j).y_m;
        double d2 = dx * dx + dy * dy;
        if (d2 < 1e-12) d2 = 1e-12;  // co-located tx/rx pairs are degenerate anyway
        inv_d4_[i][j] = 1.0 / (d2 * d2);
      }
    }
    inv_d4_meas_.assign(n_nodes_, 0.0);
    for (int i = 0; i < n_nodes_; ++i) {
      double dx = pos(i).x_m - sc_.measuring_point.x_m;
      double dy = pos(i).y_m - sc_.measuring_point.y_m;
      double d2 = dx * dx + dy * dy;
      if (d2 < 1e-12) throw std::invalid_argument("run_des: node on the measuring point");
      inv_d4_meas_[i] = 1.0 / (d2 * d2);
    }
  }

  int rx_of(int tx) const { return tx + n_tx_; }

  int draw_counter(int failures) {
    int stage = std::min(failures, sc_.cfg.max_backoff_stage);
    int window = sc_.cfg.w0 << stage;
    return std::uniform_int_distribution<int>(0, window - 1)(rng_);
  }

  void push(Event ev) {
    ev.seq = ++event_seq_;
    queue_.push(ev);
  }

  void log_event(double t, int node, EventKind kind, double mark = 0.0) {
    if (!sc_.options.record_events) return;
    trace_.events.push_back({t, static_cast<std::uint16_t>(node), kind, mark});
  }

  bool medium_busy(int tx) const {
    if (sc_.options.disable_carrier_sense) return false;
    return sensed_sum_[tx] >= threshold_gap_w_;
  }

  // A transmission is individually audible at `node` when it alone would
  // trip the busy threshold there; the sender of a frame trivially jams its
  // own reception slot.
  bool audible_at(const Flight& f, int node) const {
    if (f.src == node) return true;
    return f.mark_w * inv_d4_[f.src][node] >= threshold_gap_w_;
  }

  void add_flight(double now, FrameKind kind, int src, int dest, int owner, double duration_us) {
    Flight f;
    f.id = ++frame_seq_;
    f.kind = kind;
    f.src = src;
    f.dest = dest;
    f.owner = owner;
    f.end_us = now + duration_us;
    f.mark_w = std::exponential_distribution<double>(1.0 / sc_.cfg.tx_power_w)(rng_);
    for (Flight& g : flight_) {
      if (audible_at(f, g.dest)) g.corrupted = true;
      if (audible_at(g, f.dest)) f.corrupted = true;
    }
    for (int k = 0; k < n_tx_; ++k) {
      if (k != src) sensed_sum_[k] += f.mark_w * inv_d4_[src][k];
    }
    if (src < n_tx_) {
      NodeStats& st = trace_.node_stats[src];
      if (st.first_tx_start_us < 0) st.first_tx_start_us = now;
    }
    log_event(now, src, EventKind::TxStart, f.mark_w);
    Event ev;
    ev.time_us = f.end_us;
    ev.prio = 0;
    ev.type = Event::TxEnd;
    ev.a = f.id;
    push(ev);
    flight_.push_back(f);
    flight_changed_ = true;
  }

  void remove_flight(std::size_t idx) {
    const Flight& f = flight_[idx];
    for (int k = 0; k < n_tx_; ++k) {
      if (k != f.src) sensed_sum_[k] -= f.mark_w * inv_d4_[f.src][k];
    }
    flight_.erase(flight_.begin() + static_cast<std::ptrdiff_t>(idx));
    flight_changed_ = true;
    if (++removals_since_refresh_ >= 4096) refresh_sensed_sums();
  }

  void refresh_sensed_sums() {
    removals_since_refresh_ = 0;
    for (int k = 0; k < n_tx_; ++k) {
      double s = 0.0;
      for (const Flight& f : flight_) {
        if (f.src != k) s += f.mark_w * inv_d4_[f.src][k];
      }
      sensed_sum_[k] = s;
    }
  }

  void begin_defer(int tx) {
    nodes_[tx].phase = Phase::WaitIdle;
    nodes_[tx].epoch++;
    needs_reeval_ = true;
  }

  void start_attempt(double now, int tx) {
    nodes_[tx].phase = Phase::Tx;
    trace_.node_stats[tx].attempts++;
    if (sc_.cfg.mode == AccessMode::Basic) {
      add_flight(now, FrameKind::Data, tx, rx_of(tx), tx, slots_.ppdu_us);
    } else {
      add_flight(now, FrameKind::Rts, tx, rx_of(tx), tx, sc_.cfg.rts_us);
    }
  }

  void finish_success(double now, int tx) {
    TxState& st = nodes_[tx];
    trace_.node_stats[tx].successes++;
    log_event(now, tx, EventKind::Success);
    st.failures = st.short_fail = st.long_fail = 0;
    st.counter = draw_counter(0);  // saturated: next packet immediately
    begin_defer(tx);
  }

  void finish_failure(double now, int tx, bool long_class) {
    TxState& st = nodes_[tx];
    trace_.node_stats[tx].collisions++;
    log_event(now, tx, EventKind::Collision);
    st.failures++;
    if (long_class) {
      st.long_fail++;
    } else {
      st.short_fail++;
    }
    if (st.short_fail >= sc_.cfg.retry_limit || st.long_fail >= sc_.cfg.long_retry_limit) {
      trace_.node_stats[tx].drops++;
      log_event(now, tx, EventKind::RetryDrop);
      st.failures = st.short_fail = st.long_fail = 0;
    }
    st.counter = draw_counter(st.failures);
    begin_defer(tx);
  }

  void dispatch(const Event& ev, double now) {
    switch (ev.type) {
      case Event::TxEnd: handle_tx_end(ev, now); break;
      case Event::DifsDone: handle_difs_done(ev, now); break;
      case Event::CountZero: handle_count_zero(ev, now); break;
      case Event::FrameStart:
        add_flight(now, ev.kind, ev.src, ev.dest, ev.owner, ev.duration_us);
        break;
    }
  }

  void handle_tx_end(const Event& ev, double now) {
    std::size_t idx = flight_.size();
    for (std::size_t i = 0; i < flight_.size(); ++i) {
      if (flight_[i].id == ev.a) {
        idx = i;
        break;
      }
    }
    if (idx == flight_.size()) throw std::logic_error("run_des: dangling frame end");
    Flight f = flight_[idx];
    remove_flight(idx);
    if (f.src < n_tx_) trace_.node_stats[f.src].last_tx_end_us = now;
    log_event(now, f.src, EventKind::TxEnd);

    bool received = !f.corrupted || sc_.options.ignore_collisions;
    int tx = f.owner;
    switch (f.kind) {
      case FrameKind::Rts:
        if (received) {
          schedule_frame(now + sc_.cfg.sifs_us, FrameKind::Cts, rx_of(tx), tx, tx, sc_.cfg.cts_us);
        } else {
          finish_failure(now, tx, false);
        }
        break;
      case FrameKind::Cts:
        if (received) {
          schedule_frame(now + sc_.cfg.sifs_us, FrameKind::Data, tx, rx_of(tx), tx, slots_.ppdu_us);
        } else {
          finish_failure(now, tx, false);
        }
        break;
      case FrameKind::Data:
        if (received) {
          schedule_frame(now + sc_.cfg.sifs_us, FrameKind::Ack, rx_of(tx), tx, tx, sc_.cfg.ack_us);
        } else {
          finish_failure(now, tx, sc_.cfg.mode == AccessMode::RtsCts);
        }
        break;
      case FrameKind::Ack:
        if (received) {
          finish_success(now, tx);
        } else {
          finish_failure(now, tx, sc_.cfg.mode == AccessMode::RtsCts);
        }
        break;
    }
  }

  void schedule_frame(double at, FrameKind kind, int src, int dest, int owner, double duration) {
    Event ev;
    ev.time_us = at;
    ev.prio = 3;
    ev.type = Event::FrameStart;
    ev.kind = kind;
    ev.src = src;
    ev.dest = dest;
    ev.owner = owner;
    ev.duration_us = duration;
    push(ev);
  }

  void handle_difs_done(const Event& ev, double now) {
    int tx = static_cast<int>(ev.a);
    TxState& st = nodes_[tx];
    if (ev.epoch != st.epoch || st.phase != Phase::Difs) return;
    st.phase = Phase::Count;
    st.countdown_base_us = now;
    log_event(now, tx, EventKind::BackoffResume);
    Event zero;
    zero.time_us = now + st.counter * sc_.cfg.slot_us;
    zero.prio = 2;
    zero.type = Event::CountZero;
    zero.a = ev.a;
    zero.epoch = st.epoch;
    push(zero);
  }

  void handle_count_zero(const Event& ev, double now) {
    int tx = static_cast<int>(ev.a);
    TxState& st = nodes_[tx];
    if (ev.epoch != st.epoch || st.phase != Phase::Count) return;
    st.counter = 0;
    start_attempt(now, tx);
  }

  // Promote idle waiters, freeze busy counters.  Runs after every batch of
  // same-time events so that simultaneous countdown expiries transmit before
  // anyone freezes on the new energy.
  void reevaluate(double now) {
    for (int tx = 0; tx < n_tx_; ++tx) {
      TxState& st = nodes_[tx];
      bool busy = medium_busy(tx);
      switch (st.phase) {
        case Phase::WaitIdle:
          if (!busy) {
            st.phase = Phase::Difs;
            st.epoch++;
            Event ev;
            ev.time_us = now + sc_.cfg.difs_us;
            ev.prio = 1;
            ev.type = Event::DifsDone;
            ev.a = static_cast<std::uint64_t>(tx);
            ev.epoch = st.epoch;
            push(ev);
          }
          break;
        case Phase::Difs:
          if (busy) {
            st.phase = Phase::WaitIdle;
            st.epoch++;
          }
          break;
        case Phase::Count:
          if (busy) {
            int consumed = static_cast<int>(std::floor((now - st.countdown_base_us) / sc_.cfg.slot_us));
            consumed = std::min(consumed, st.counter);
            st.counter -= consumed;
            st.phase = Phase::WaitIdle;
            st.epoch++;
            log_event(now, tx, EventKind::BackoffFreeze);
          }
          break;
        case Phase::Tx:
          break;
      }
    }
  }

  void record_interval(double now) {
    if (!trace_.intervals.empty() && trace_.intervals.back().begin_us == now) {
      trace_.intervals.pop_back();  // superseded zero-length piece
    }
    PowerInterval pi;
    pi.begin_us = now;
    double agg = 0.0;
    for (const Flight& f : flight_) agg += f.mark_w * inv_d4_meas_[f.src];
    pi.aggregate_w = agg;
    if (sc_.options.record_active_sets) {
      pi.active_tx.reserve(flight_.size());
      for (const Flight& f : flight_) pi.active_tx.push_back(static_cast<std::uint16_t>(f.src));
    }
    trace_.intervals.push_back(std::move(pi));
  }

  Scenario sc_;
  SlotDurations slots_;
  int n_tx_ = 0;
  int n_nodes_ = 0;
  double threshold_gap_w_ = 0.0;
  std::mt19937_64 rng_;
  std::vector<std::vector<double>> inv_d4_;
  std::vector<double> inv_d4_meas_;
  std::vector<TxState> nodes_;
  std::vector<double> sensed_sum_;
  std::vector<Flight> flight_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  DesTrace trace_;
  std::uint64_t event_seq_ = 0;
  std::uint64_t frame_seq_ = 0;
  int removals_since_refresh_ = 0;
  bool flight_changed_ = false;
  bool needs_reeval_ = false;
};

}  // namespace

DesTrace run_des(const Scenario& scenario) { return Simulator(scenario).run(); }

}  // namespace csmanet::des
