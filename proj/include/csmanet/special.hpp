#pragma once

#include <vector>

namespace csmanet {

// Complementary error function evaluated to better than 1e-12 relative
// accuracy over the positive axis: truncated Taylor series below the
// crossover, Lentz continued fraction above it.  std::erfc is deliberately
// not used here so the two can cross-check each other in tests.
double erfc_precise(double x);

// log(erfc(x)) without underflow; usable far beyond erfc's double range.
double log_erfc(double x);

// Inverse of erfc_precise on (0, 2); bisection refined by Newton steps.
double erfc_inv(double q);

// Poisson PMF values 0..n_max, truncated where the remaining tail mass
// drops below `tail`.
std::vector<double> poisson_pmf_table(double mean, double tail);

// Exact for n <= 60 or so (result below 2^53).
double binomial_coefficient(int n, int k);

// Binomial(n, p) PMF as a dense vector of size n+1.
std::vector<double> binomial_pmf(int n, double p);

}  // namespace csmanet
