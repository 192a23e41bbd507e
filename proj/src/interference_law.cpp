#include "csmanet/interference_law.hpp"

#include <cmath>
#include <stdexcept>

#include "csmanet/special.hpp"

namespace csmanet {

namespace {

void check(const InterferenceLaw& law, double t) {
  if (!(law.lambda_eff > 0)) throw std::domain_error("InterferenceLaw: lambda_eff must be > 0");
  if (!(law.tx_power_w > 0)) throw std::domain_error("InterferenceLaw: tx_power_w must be > 0");
  if (!(t > 0)) throw std::domain_error("InterferenceLaw: t must be > 0");
}

}  // namespace

double InterferenceLaw::coefficient() const {
  return lambda_eff * M_PI * M_PI * std::sqrt(tx_power_w) / 4.0;
}

double InterferenceLaw::cdf(double t_watts) const {
  check(*this, t_watts);
  return erfc_precise(coefficient() / std::sqrt(t_watts));
}

double InterferenceLaw::pdf(double t_watts) const {
  check(*this, t_watts);
  double c = coefficient();
  return c / std::sqrt(M_PI) * std::pow(t_watts, -1.5) * std::exp(-c * c / t_watts);
}

double InterferenceLaw::log_cdf(double t_watts) const {
  check(*this, t_watts);
  return log_erfc(coefficient() / std::sqrt(t_watts));
}

double InterferenceLaw::log_pdf(double t_watts) const {
  check(*this, t_watts);
  double c = coefficient();
  return std::log(c / std::sqrt(M_PI)) - 1.5 * std::log(t_watts) - c * c / t_watts;
}

double InterferenceLaw::quantile(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("InterferenceLaw::quantile: q must be in (0, 1)");
  double x = erfc_inv(q);
  double ratio = coefficient() / x;
  return ratio * ratio;
}

}  // namespace csmanet
