#include "csmanet/point_process.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "csmanet/rng.hpp"

namespace csmanet {

std::string to_string(PointProcess p) {
  switch (p) {
    case PointProcess::Ppp: return "ppp";
    case PointProcess::Mhc: return "mhc";
    case PointProcess::Ssi: return "ssi";
  }
  return "?";
}

PointProcess point_process_from_string(const std::string& s) {
  if (s == "ppp") return PointProcess::Ppp;
  if (s == "mhc") return PointProcess::Mhc;
  if (s == "ssi") return PointProcess::Ssi;
  throw std::invalid_argument("unknown point process: " + s);
}

void MonteCarloConfig::validate() const {
  if (!(lambda >= 0)) throw std::invalid_argument("MonteCarloConfig: lambda must be >= 0");
  if (!(exclusion_m >= 0)) throw std::invalid_argument("MonteCarloConfig: exclusion must be >= 0");
  if (!(region_radius_m > 0)) throw std::invalid_argument("MonteCarloConfig: region radius must be > 0");
  if (!(tx_power_w > 0)) throw std::invalid_argument("MonteCarloConfig: tx power must be > 0");
  if (iterations < 1) throw std::invalid_argument("MonteCarloConfig: iterations must be >= 1");
}

namespace {

constexpr double kOriginGuard_m = 1e-6;

// Uniform candidates on the disk in generation order; generation order
// doubles as the type-II mark order.  Points landing on the measuring point
// are re-drawn (probability ~0).
std::vector<MarkedPoint> draw_candidates(const MonteCarloConfig& cfg, std::uint64_t index) {
  std::mt19937_64 rng = make_engine(cfg.seed, index);
  double area_mean = cfg.lambda * M_PI * cfg.region_radius_m * cfg.region_radius_m;
  std::poisson_distribution<int> count_dist(area_mean);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> fading(1.0 / cfg.tx_power_w);
  int count = area_mean > 0 ? count_dist(rng) : 0;
  std::vector<MarkedPoint> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    MarkedPoint p;
    do {
      double r = cfg.region_radius_m * std::sqrt(unif(rng));
      double theta = 2.0 * M_PI * unif(rng);
      p.x_m = r * std::cos(theta);
      p.y_m = r * std::sin(theta);
    } while (p.x_m * p.x_m + p.y_m * p.y_m < kOriginGuard_m * kOriginGuard_m);
    p.mark_w = fading(rng);
    pts.push_back(p);
  }
  return pts;
}

double dist2(const MarkedPoint& a, const MarkedPoint& b) {
  double dx = a.x_m - b.x_m;
  double dy = a.y_m - b.y_m;
  return dx * dx + dy * dy;
}

}  // namespace

PointPattern sample_ppp(const MonteCarloConfig& cfg, std::uint64_t index) {
  cfg.validate();
  return {draw_candidates(cfg, index), cfg.region_radius_m};
}

PointPattern sample_mhc(const MonteCarloConfig& cfg, std::uint64_t index) {
  cfg.validate();
  std::vector<MarkedPoint> cand = draw_candidates(cfg, index);
  double r2 = cfg.exclusion_m * cfg.exclusion_m;
  PointPattern out;
  out.region_radius_m = cfg.region_radius_m;
  // Retain a candidate iff no earlier-marked candidate (retained or not)
  // lies strictly inside the exclusion ball.
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool blocked = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (dist2(cand[i], cand[j]) < r2) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.points.push_back(cand[i]);
  }
  return out;
}

PointPattern sample_ssi(const MonteCarloConfig& cfg, std::uint64_t index) {
  cfg.validate();
  std::vector<MarkedPoint> cand = draw_candidates(cfg, index);
  double r2 = cfg.exclusion_m * cfg.exclusion_m;
  PointPattern out;
  out.region_radius_m = cfg.region_radius_m;
  // Sequential acceptance against previously accepted points only.
  for (const MarkedPoint& c : cand) {
    bool blocked = false;
    for (const MarkedPoint& kept : out.points) {
      if (dist2(c, kept) < r2) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.points.push_back(c);
  }
  return out;
}

double measure_aggregate(const PointPattern& pattern, double x_m, double y_m) {
  double sum = 0.0;
  for (const MarkedPoint& p : pattern.points) {
    double dx = p.x_m - x_m;
    double dy = p.y_m - y_m;
    double d2 = dx * dx + dy * dy;
    if (d2 < kOriginGuard_m * kOriginGuard_m)
      throw std::domain_error("measure_aggregate: point within 1e-6 m of the measuring point");
    sum += p.mark_w / (d2 * d2);
  }
  return sum;
}

EmpiricalSample monte_carlo_interference(const MonteCarloConfig& cfg) {
  cfg.validate();
  EmpiricalSample sample;
  sample.obs.reserve(cfg.iterations);
  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    PointPattern pattern;
    switch (cfg.process) {
      case PointProcess::Ppp: pattern = sample_ppp(cfg, i); break;
      case PointProcess::Mhc: pattern = sample_mhc(cfg, i); break;
      case PointProcess::Ssi: pattern = sample_ssi(cfg, i); break;
    }
    sample.obs.push_back({measure_aggregate(pattern), 1.0});
  }
  return sample;
}

}  // namespace csmanet
