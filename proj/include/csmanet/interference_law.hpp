#pragma once

namespace csmanet {

// Aggregate-interference law at a random point of a plane filled with
// density lambda_eff of transmitters at power tx_power_w, fourth-power path
// loss, Rayleigh fading:
//   F(t) = erfc(lambda_eff pi^2 sqrt(p) / (4 sqrt(t)))
//   f(t) = (c / sqrt(pi)) t^(-3/2) exp(-c^2 / t),  c = lambda_eff pi^2 sqrt(p) / 4.
// Log variants stay finite far into the left tail where the plain values
// underflow double.
struct InterferenceLaw {
  double lambda_eff = 0.0;  // nodes/m^2
  double tx_power_w = 0.0;

  double coefficient() const;  // c above

  double cdf(double t_watts) const;
  double pdf(double t_watts) const;      // density per watt
  double log_cdf(double t_watts) const;
  double log_pdf(double t_watts) const;

  // F(t) = q for q in (0, 1).
  double quantile(double q) const;
};

}  // namespace csmanet
