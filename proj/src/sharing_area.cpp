#include "csmanet/sharing_area.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/carrier_sense.hpp"
#include "csmanet/dcf.hpp"
#include "csmanet/slot_timing.hpp"
#include "csmanet/special.hpp"

namespace csmanet {

namespace {

// Per-count tables shared by the fixed point and the Z distribution.
// busy_share[a] = P[channel busy | N_a = a] = 1 - B_a(0); power[a] is the
// full time-weighted transmitter-count PMF.  Index 0 is the empty area.
struct AreaTables {
  std::vector<double> poisson;              // P[N = n], truncated
  std::vector<double> busy_share;           // a -> 1 - B_a(0)
  std::vector<std::vector<double>> power;   // a -> B_a(.)
};

AreaTables build_tables(double lambda, const PhyMacConfig& cfg, double tail) {
  cfg.validate();
  AreaTables t;
  double range = effective_cs_range(cfg);
  t.poisson = poisson_pmf_table(sharing_area_mean(lambda, range), tail);
  int n_max = static_cast<int>(t.poisson.size()) - 1;
  SlotDurations slots = slot_durations(cfg);
  t.busy_share.assign(n_max + 1, 0.0);
  t.power.resize(n_max + 1);
  t.power[0] = {1.0};
  for (int a = 1; a <= n_max; ++a) {
    DcfFixedPoint fp = solve_dcf(a, cfg);
    t.power[a] = power_distribution(a, fp.tau, slots);
    t.busy_share[a] = 1.0 - t.power[a][0];
  }
  return t;
}

double busy_rhs(const AreaTables& t, const SectorModel& model, double p_on) {
  int n_max = static_cast<int>(t.poisson.size()) - 1;
  double total = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> apmf = active_node_pmf(n, p_on, model);
    double inner = 0.0;
    for (int a = 1; a <= n; ++a) inner += apmf[a] * t.busy_share[a];
    total += t.poisson[n] * inner;
  }
  return total;
}

std::vector<double> z_pmf_from_tables(const AreaTables& t, const SectorModel& model, double p_on) {
  int n_max = static_cast<int>(t.poisson.size()) - 1;
  std::vector<double> z(n_max + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<double> apmf = active_node_pmf(n, p_on, model);
    for (int a = 0; a <= n; ++a) {
      const std::vector<double>& b = t.power[a];
      double w = t.poisson[n] * apmf[a];
      if (w == 0.0) continue;
      for (int j = 0; j < static_cast<int>(b.size()); ++j) z[j] += w * b[j];
    }
  }
  return z;
}

}  // namespace

POnSolution solve_p_on(double lambda, const PhyMacConfig& cfg, const SectorModel& model,
                       double tail) {
  if (!(lambda > 0)) throw std::invalid_argument("solve_p_on: lambda must be > 0");
  model.validate();
  AreaTables tables = build_tables(lambda, cfg, tail);
  auto g = [&](double p) { return busy_rhs(tables, model, p) - p; };
  POnSolution sol;
  double g0 = g(0.0);
  double g1 = g(1.0);
  if (g0 == 0.0) {
    sol.p_on = 0.0;
    sol.residual = 0.0;
    return sol;
  }
  if (!(g0 > 0.0 && g1 < 0.0)) {
    // No sign change; report the boundary that minimizes |g|, flagged.
    sol.bracketed = false;
    sol.p_on = std::fabs(g0) <= std::fabs(g1) ? 0.0 : 1.0;
    sol.residual = std::min(std::fabs(g0), std::fabs(g1));
    return sol;
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  sol.p_on = 0.5 * (lo + hi);
  sol.residual = std::fabs(g(sol.p_on));
  if (sol.residual >= 1e-9) throw std::runtime_error("solve_p_on: residual did not converge");
  return sol;
}

std::vector<double> tx_count_distribution(double lambda, const PhyMacConfig& cfg, double p_on_star,
                                          const SectorModel& model, double tail) {
  if (!(lambda > 0)) throw std::invalid_argument("tx_count_distribution: lambda must be > 0");
  if (!(p_on_star >= 0.0 && p_on_star <= 1.0))
    throw std::invalid_argument("tx_count_distribution: p_on_star must be in [0, 1]");
  model.validate();
  AreaTables tables = build_tables(lambda, cfg, tail);
  return z_pmf_from_tables(tables, model, p_on_star);
}

double expected_tx_count(const std::vector<double>& z_pmf) {
  double ez = 0.0;
  for (std::size_t z = 0; z < z_pmf.size(); ++z) ez += static_cast<double>(z) * z_pmf[z];
  return ez;
}

double effective_density(const SharingAreaAnalysis& analysis) {
  double half = analysis.cs_range_m / 2.0;
  return expected_tx_count(analysis.z_pmf) / (M_PI * half * half);
}

SharingAreaAnalysis analyze_sharing_area(double lambda, const PhyMacConfig& cfg,
                                         const SectorModel& model, double tail) {
  SharingAreaAnalysis out;
  out.lambda_init = lambda;
  out.cs_range_m = effective_cs_range(cfg);
  POnSolution sol = solve_p_on(lambda, cfg, model, tail);
  out.p_on_star = sol.p_on;
  out.p_on_bracketed = sol.bracketed;
  out.z_pmf = tx_count_distribution(lambda, cfg, sol.p_on, model, tail);
  out.e_z = expected_tx_count(out.z_pmf);
  out.lambda_eff = effective_density(out);
  return out;
}

double mhc_density_baseline(double lambda, double exclusion_m) {
  if (!(lambda >= 0)) throw std::invalid_argument("mhc_density_baseline: lambda must be >= 0");
  if (!(exclusion_m > 0)) throw std::invalid_argument("mhc_density_baseline: exclusion must be > 0");
  double area = M_PI * exclusion_m * exclusion_m;
  return -std::expm1(-lambda * area) / area;
}

KvMap SharingAreaAnalysis::to_kv() const {
  KvMap kv;
  kv.set("lambda_init", lambda_init);
  kv.set("cs_range_m", cs_range_m);
  kv.set("p_on_star", p_on_star);
  kv.set("p_on_bracketed", static_cast<long long>(p_on_bracketed ? 1 : 0));
  kv.set("e_z", e_z);
  kv.set("lambda_eff", lambda_eff);
  std::string pmf;
  for (std::size_t i = 0; i < z_pmf.size(); ++i) {
    if (i) pmf += ", ";
    pmf += format_double(z_pmf[i]);
  }
  kv.set("z_pmf", pmf);
  return kv;
}

}  // namespace csmanet
