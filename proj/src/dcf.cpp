#include "csmanet/dcf.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/special.hpp"

namespace csmanet {

double dcf_tau(double p_coll, int w0, int max_stage, int retry_limit) {
  if (!(p_coll >= 0.0 && p_coll < 1.0)) throw std::domain_error("dcf_tau: p_coll must be in [0, 1)");
  if (w0 < 2) throw std::domain_error("dcf_tau: w0 must be >= 2");
  if (retry_limit < 1) throw std::domain_error("dcf_tau: retry_limit must be >= 1");
  // Weighted mean of W_i = 2^min(i, max_stage) * w0 over the stage
  // distribution p_coll^i / sum_j p_coll^j, i = 0 .. retry_limit-1.
  double window_sum = 0.0;
  double weight_sum = 0.0;
  double pci = 1.0;
  double wi = w0;
  for (int i = 0; i < retry_limit; ++i) {
    window_sum += wi * pci;
    weight_sum += pci;
    pci *= p_coll;
    if (i < max_stage) wi *= 2.0;
  }
  double mean_window = window_sum / weight_sum;
  double mean_counter = 0.5 * (mean_window - 1.0);
  return 1.0 / mean_counter;
}

DcfFixedPoint solve_dcf(int active_count, const PhyMacConfig& cfg) {
  cfg.validate();
  if (active_count < 1) throw std::invalid_argument("solve_dcf: active_count must be >= 1");
  DcfFixedPoint fp;
  fp.active_count = active_count;
  if (active_count == 1) {
    fp.p_coll = 0.0;
    fp.tau = dcf_tau(0.0, cfg.w0, cfg.max_backoff_stage, cfg.retry_limit);
    return fp;
  }
  // g(pc) = pc - (1 - (1 - tau(pc))^(a-1)) is strictly increasing with
  // g(0) <= 0 and g(1-) >= 0.
  auto g = [&](double pc) {
    double tau = dcf_tau(pc, cfg.w0, cfg.max_backoff_stage, cfg.retry_limit);
    return pc - (1.0 - std::pow(1.0 - tau, active_count - 1));
  };
  double lo = 0.0;
  double hi = 1.0 - 1e-12;
  if (g(hi) < 0) throw std::runtime_error("solve_dcf: fixed point escaped the bracket");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  fp.p_coll = 0.5 * (lo + hi);
  fp.tau = dcf_tau(fp.p_coll, cfg.w0, cfg.max_backoff_stage, cfg.retry_limit);
  double residual = std::fabs(fp.p_coll - (1.0 - std::pow(1.0 - fp.tau, active_count - 1)));
  if (residual > 1e-10) throw std::runtime_error("solve_dcf: residual did not converge");
  return fp;
}

std::vector<double> concurrent_tx_pmf(int active_count, double tau) {
  if (active_count < 0) throw std::invalid_argument("concurrent_tx_pmf: active_count must be >= 0");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("concurrent_tx_pmf: tau must be in [0, 1]");
  return binomial_pmf(active_count, tau);
}

}  // namespace csmanet
