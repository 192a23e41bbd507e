#include "csmanet/des/scenario.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "csmanet/rng.hpp"

namespace csmanet::des {

void Scenario::validate() const {
  cfg.validate();
  if (!(grid_m > 0)) throw std::invalid_argument("Scenario: grid side must be > 0");
  if (!(duration_us > 0)) throw std::invalid_argument("Scenario: duration must be > 0");
  if (tx_pos.size() != rx_pos.size()) throw std::invalid_argument("Scenario: rx/tx count mismatch");
  auto inside = [&](Position p) {
    return p.x_m >= 0 && p.x_m <= grid_m && p.y_m >= 0 && p.y_m <= grid_m;
  };
  for (const Position& p : tx_pos)
    if (!inside(p)) throw std::invalid_argument("Scenario: transmitter outside grid");
  for (const Position& p : rx_pos)
    if (!inside(p)) throw std::invalid_argument("Scenario: receiver outside grid");
  for (const Position& p : tx_pos) {
    double dx = p.x_m - measuring_point.x_m;
    double dy = p.y_m - measuring_point.y_m;
    if (dx * dx + dy * dy < 1e-12)
      throw std::invalid_argument("Scenario: node coincides with the measuring point");
  }
}

Position attach_receiver(Position tx, double grid_m, double offset_m) {
  Position rx = tx;
  rx.x_m += (tx.x_m + offset_m <= grid_m) ? offset_m : -offset_m;
  rx.y_m += (tx.y_m + offset_m <= grid_m) ? offset_m : -offset_m;
  return rx;
}

Scenario build_poisson_scenario(double lambda, const PhyMacConfig& cfg, double grid_m,
                                double duration_us, std::uint64_t seed) {
  if (!(lambda >= 0)) throw std::invalid_argument("build_poisson_scenario: lambda must be >= 0");
  if (!(grid_m > 0)) throw std::invalid_argument("build_poisson_scenario: zero-area grid");
  Scenario s;
  s.cfg = cfg;
  s.grid_m = grid_m;
  s.duration_us = duration_us;
  s.seed = seed;
  s.measuring_point = {grid_m / 2.0, grid_m / 2.0};
  std::mt19937_64 rng = make_engine(seed, 0);
  std::poisson_distribution<int> count_dist(lambda * grid_m * grid_m);
  std::uniform_real_distribution<double> unif(0.0, grid_m);
  int count = lambda > 0 ? count_dist(rng) : 0;
  for (int i = 0; i < count; ++i) {
    Position tx{unif(rng), unif(rng)};
    double dx = tx.x_m - s.measuring_point.x_m;
    double dy = tx.y_m - s.measuring_point.y_m;
    if (dx * dx + dy * dy < 1e-12) {
      --i;  // re-draw a node that landed on the measuring point
      continue;
    }
    s.tx_pos.push_back(tx);
    s.rx_pos.push_back(attach_receiver(tx, grid_m));
  }
  s.validate();
  return s;
}

Scenario build_grid_scenario(int rows, int cols, double spacing_m, const PhyMacConfig& cfg,
                             double grid_m, double duration_us, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("build_grid_scenario: empty grid");
  if (!(grid_m > 0)) throw std::invalid_argument("build_grid_scenario: zero-area grid");
  Scenario s;
  s.cfg = cfg;
  s.grid_m = grid_m;
  s.duration_us = duration_us;
  s.seed = seed;
  s.measuring_point = {grid_m / 2.0, grid_m / 2.0};
  double x0 = (grid_m - (cols - 1) * spacing_m) / 2.0;
  double y0 = (grid_m - (rows - 1) * spacing_m) / 2.0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Position tx{x0 + c * spacing_m, y0 + r * spacing_m};
      s.tx_pos.push_back(tx);
      s.rx_pos.push_back(attach_receiver(tx, grid_m));
    }
  }
  return s;
}

std::vector<int> transmitters_within(const Scenario& s, Position center, double radius_m) {
  std::vector<int> out;
  for (int i = 0; i < s.tx_count(); ++i) {
    double dx = s.tx_pos[i].x_m - center.x_m;
    double dy = s.tx_pos[i].y_m - center.y_m;
    if (std::sqrt(dx * dx + dy * dy) <= radius_m) out.push_back(i);
  }
  return out;
}

KvMap Scenario::to_kv() const {
  KvMap kv;
  for (const auto& [k, v] : cfg.to_kv().entries()) kv.set("cfg." + k, v);
  kv.set("grid_m", grid_m);
  kv.set("duration_us", duration_us);
  kv.set("seed", static_cast<long long>(seed));
  kv.set("measuring_point", format_double(measuring_point.x_m) + ", " +
                                format_double(measuring_point.y_m));
  kv.set("tx_count", static_cast<long long>(tx_pos.size()));
  for (std::size_t i = 0; i < tx_pos.size(); ++i) {
    kv.set("tx." + std::to_string(i),
           format_double(tx_pos[i].x_m) + ", " + format_double(tx_pos[i].y_m));
    kv.set("rx." + std::to_string(i),
           format_double(rx_pos[i].x_m) + ", " + format_double(rx_pos[i].y_m));
  }
  return kv;
}

Scenario Scenario::from_kv(const KvMap& kv) {
  Scenario s;
  KvMap cfg_kv;
  for (const auto& [k, v] : kv.entries()) {
    if (k.rfind("cfg.", 0) == 0) cfg_kv.set(k.substr(4), v);
  }
  s.cfg = PhyMacConfig::from_kv(cfg_kv);
  s.grid_m = kv.get_double("grid_m");
  s.duration_us = kv.get_double("duration_us");
  s.seed = static_cast<std::uint64_t>(kv.get_int("seed"));
  auto mp = kv.get_double_list("measuring_point");
  if (mp.size() != 2) throw std::invalid_argument("Scenario: bad measuring_point");
  s.measuring_point = {mp[0], mp[1]};
  long long n = kv.get_int("tx_count");
  for (long long i = 0; i < n; ++i) {
    auto tx = kv.get_double_list("tx." + std::to_string(i));
    auto rx = kv.get_double_list("rx." + std::to_string(i));
    if (tx.size() != 2 || rx.size() != 2) throw std::invalid_argument("Scenario: bad node entry");
    s.tx_pos.push_back({tx[0], tx[1]});
    s.rx_pos.push_back({rx[0], rx[1]});
  }
  s.validate();
  return s;
}

}  // namespace csmanet::des
