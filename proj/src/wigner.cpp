#include "oscent/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace oscent {

namespace {

constexpr double kPi = 3.14159265358979323846;

WignerForm build(double omega1, double omega2, double r1, double r2, double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("wigner form: effective frequencies must be > 0");
  const double s = std::sin(alpha), c = std::cos(alpha);
  const double s2 = s * s, c2 = c * c, sc = s * c;
  const double ww = omega1 * omega2;
  WignerForm w;
  w.omega1 = omega1;
  w.omega2 = omega2;
  w.r1 = r1;
  w.r2 = r2;
  w.alpha = alpha;
  w.d = omega1 * s2 + omega2 * c2;
  w.d_tilde = omega1 * c2 + omega2 * s2;
  const double dr = r1 - r2;
  w.eta_bar = w.d * w.d_tilde + s2 * c2 * dr * dr;

  w.A1 = (ww * w.d_tilde + omega2 * r1 * r1 * c2 + omega1 * r2 * r2 * s2) / ww;
  w.A2 = (ww * w.d + omega2 * r1 * r1 * s2 + omega1 * r2 * r2 * c2) / ww;
  w.A3 = sc * (ww * (omega1 - omega2) + omega2 * r1 * r1 - omega1 * r2 * r2) / ww;
  w.B1 = w.d / ww;
  w.B2 = w.d_tilde / ww;
  w.B3 = -sc * (omega1 - omega2) / ww;
  w.F = sc * (omega2 * r1 - omega1 * r2) / ww;
  w.D11 = -(omega2 * r1 * c2 + omega1 * r2 * s2) / ww;
  w.D22 = -(omega2 * r1 * s2 + omega1 * r2 * c2) / ww;

  w.alpha1 = (w.d_tilde * ww + omega2 * r1 * r1 * c2 + omega1 * r2 * r2 * s2) / w.eta_bar;
  w.alpha2 = w.d / w.eta_bar;
  w.alpha3 = -(omega2 * r1 * c2 + omega1 * r2 * s2) / w.eta_bar;
  return w;
}

}  // namespace

WignerForm wigner_full(double omega1, double omega2, double r1, double r2, double alpha) {
  return build(omega1, omega2, r1, r2, alpha);
}

WignerForm wigner_marginal(double omega1, double omega2, double r1, double r2, double alpha) {
  return build(omega1, omega2, r1, r2, alpha);
}

WignerForm wigner_form(const TwoModeState& state) {
  return build(state.mode1.omega_eff, state.mode2.omega_eff, state.mode1.log_deriv,
               state.mode2.log_deriv, state.alpha);
}

double wigner_full_value(const WignerForm& w, double x1, double x2, double p1, double p2) {
  const double e = -w.A1 * x1 * x1 - w.A2 * x2 * x2 - w.B1 * p1 * p1 - w.B2 * p2 * p2 +
                   2.0 * w.A3 * x1 * x2 + 2.0 * w.B3 * p1 * p2 + 2.0 * w.F * (x1 * p2 + x2 * p1) +
                   2.0 * w.D11 * x1 * p1 + 2.0 * w.D22 * x2 * p2;
  return std::exp(e) / (kPi * kPi);
}

double wigner_marginal_value(const WignerForm& w, double x, double p) {
  const double norm = std::sqrt(w.omega1 * w.omega2 / w.eta_bar) / kPi;
  return norm * std::exp(-w.alpha1 * x * x - w.alpha2 * p * p + 2.0 * w.alpha3 * x * p);
}

SecondMoments second_moments(const WignerForm& w) {
  const double s2 = std::sin(w.alpha) * std::sin(w.alpha);
  const double c2 = std::cos(w.alpha) * std::cos(w.alpha);
  SecondMoments m;
  m.x_sq = w.d / (2.0 * w.omega1 * w.omega2);
  m.p_sq = 0.5 * (w.d_tilde + w.r1 * w.r1 * c2 / w.omega1 + w.r2 * w.r2 * s2 / w.omega2);
  return m;
}

std::pair<double, double> uncertainty_omega(double omega1, double omega2, double r1, double r2,
                                            double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("uncertainty_omega: effective frequencies must be > 0");
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double f1 = omega1 + r1 * r1 / omega1;
  const double f2 = omega2 + r2 * r2 / omega2;
  const double omega = (c2 / omega1 + s2 / omega2) * (f1 * c2 + f2 * s2);
  const double omega_tilde = (s2 / omega1 + c2 / omega2) * (f1 * s2 + f2 * c2);
  return {omega, omega_tilde};
}

std::pair<double, double> uncertainty_omega(const TwoModeState& state) {
  return uncertainty_omega(state.mode1.omega_eff, state.mode2.omega_eff, state.mode1.log_deriv,
                           state.mode2.log_deriv, state.alpha);
}

}  // namespace oscent
