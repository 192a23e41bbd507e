#pragma once

#include <vector>

#include "csmanet/phy_mac.hpp"

namespace csmanet {

// Saturated-traffic steady state of the binary exponential backoff inside
// one sharing area: tau is the per-slot transmission probability, p_coll the
// conditional collision probability.
struct DcfFixedPoint {
  int active_count = 0;
  double tau = 0.0;
  double p_coll = 0.0;
};

// Per-slot transmission probability for a given conditional collision
// probability.  1/tau equals the mean residual backoff counter averaged over
// the attempt-stage distribution: stage i (0-based, capped at the maximum
// backoff stage) is occupied with probability proportional to p_coll^i over
// the retry_limit attempts, and contributes (window_i - 1)/2 slots.  The
// summed form is algebraically identical to the usual closed form for
// retry_limit >= max_stage and has no removable singularity at p_coll = 1/2.
double dcf_tau(double p_coll, int w0, int max_stage, int retry_limit);

// Solves tau = dcf_tau(p_coll) jointly with
// p_coll = 1 - (1 - tau)^(active_count - 1) by bisection on p_coll; the map
// is monotone, so the root is unique.  Residual below 1e-10 in both
// relations.  active_count == 1 yields p_coll = 0 exactly.
DcfFixedPoint solve_dcf(int active_count, const PhyMacConfig& cfg);

// Binomial(active_count, tau) PMF of the number of simultaneous
// transmitters in one slot.
std::vector<double> concurrent_tx_pmf(int active_count, double tau);

}  // namespace csmanet
