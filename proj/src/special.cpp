#include "csmanet/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace csmanet {

namespace {

constexpr double kSeriesCrossover = 3.0;
const long double kTwoOverSqrtPi = 1.1283791670955125738961589031215452L;

// erf(x) by Taylor series in long double; adequate below the crossover where
// cancellation in 1 - erf stays under control.
long double erf_series(long double x) {
  long double x2 = x * x;
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / n;
    long double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(static_cast<double>(add)) < 1e-22 * std::fabs(static_cast<double>(sum))) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Continued fraction for sqrt(pi) * x * exp(x^2) * erfc(x), evaluated by the
// modified Lentz algorithm.  Converges quickly for x >= ~2.5.
long double erfc_cf_scaled(long double x) {
  const long double tiny = 1e-40L;
  long double f = x;
  if (f == 0) f = tiny;
  long double c = f;
  long double d = 0;
  for (int n = 1; n < 400; ++n) {
    long double a = n * 0.5L;
    d = x + a * d;
    if (d == 0) d = tiny;
    c = x + a / c;
    if (c == 0) c = tiny;
    d = 1 / d;
    long double delta = c * d;
    f *= delta;
    if (std::fabs(static_cast<double>(delta - 1)) < 1e-18) break;
  }
  // f approximates x + K(a_n / x); erfc(x) = exp(-x^2)/sqrt(pi) / f.
  return f;
}

const long double kSqrtPi = 1.7724538509055160272981674833411452L;

}  // namespace

double erfc_precise(double x) {
  if (std::isnan(x)) return x;
  if (x < 0) return 2.0 - erfc_precise(-x);
  if (x == 0) return 1.0;
  if (x < kSeriesCrossover) {
    return static_cast<double>(1.0L - erf_series(static_cast<long double>(x)));
  }
  long double lx = x;
  long double f = erfc_cf_scaled(lx);
  long double v = std::exp(-lx * lx) / (kSqrtPi * f);
  return static_cast<double>(v);
}

double log_erfc(double x) {
  if (x < kSeriesCrossover) {
    double v = erfc_precise(x);
    return std::log(v);
  }
  long double lx = x;
  long double f = erfc_cf_scaled(lx);
  long double lv = -lx * lx - std::log(kSqrtPi * f);
  return static_cast<double>(lv);
}

double erfc_inv(double q) {
  if (!(q > 0.0 && q < 2.0)) throw std::domain_error("erfc_inv: argument must be in (0, 2)");
  if (q > 1.0) return -erfc_inv(2.0 - q);
  if (q == 1.0) return 0.0;
  // erfc is strictly decreasing on [0, inf); bracket then bisect.
  double lo = 0.0;
  double hi = 1.0;
  while (erfc_precise(hi) > q) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e4) break;
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (erfc_precise(mid) > q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // Newton polish: d/dx erfc = -2/sqrt(pi) exp(-x^2).
  for (int i = 0; i < 3; ++i) {
    double fx = erfc_precise(x) - q;
    double dfx = -2.0 / std::sqrt(M_PI) * std::exp(-x * x);
    double step = fx / dfx;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

std::vector<double> poisson_pmf_table(double mean, double tail) {
  if (!(mean >= 0)) throw std::domain_error("poisson_pmf_table: mean must be >= 0");
  if (!(tail > 0)) throw std::domain_error("poisson_pmf_table: tail must be > 0");
  std::vector<double> pmf;
  double term = std::exp(-mean);
  double cum = term;
  pmf.push_back(term);
  int n = 0;
  while (1.0 - cum > tail) {
    ++n;
    term *= mean / n;
    pmf.push_back(term);
    cum += term;
    if (n > 100000) throw std::runtime_error("poisson_pmf_table: truncation did not converge");
  }
  return pmf;
}

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return std::round(c);
}

std::vector<double> binomial_pmf(int n, double p) {
  if (n < 0) throw std::domain_error("binomial_pmf: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_pmf: p must be in [0, 1]");
  std::vector<double> pmf(n + 1);
  for (int k = 0; k <= n; ++k) {
    pmf[k] = binomial_coefficient(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
  }
  return pmf;
}

}  // namespace csmanet
