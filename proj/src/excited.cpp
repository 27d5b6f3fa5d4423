#include "oscent/excited.hpp"

#include <cmath>
#include <stdexcept>

namespace oscent {

std::pair<std::complex<double>, double> excited_F(double omega1, double omega2, double r1,
                                                  double r2, double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("excited_F: effective frequencies must be > 0");
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double D = omega1 * s2 + omega2 * c2;
  const double dr = r1 - r2;
  const double pre = s2 * c2 / (4.0 * D * D);
  const std::complex<double> f1 =
      pre * std::complex<double>((omega1 - omega2) * (omega1 * (1.0 + s2) + omega2 * c2) -
                                     c2 * dr * dr,
                                 -2.0 * omega1 * dr);
  const double dw = omega1 - omega2;
  const double a3 = s2 * c2 * (dw * dw + dr * dr) / (4.0 * D);
  const double f2 = (2.0 * a3 * c2 + omega1 * s2) / D;
  return {f1, f2};
}

std::array<double, 4> wigner01_h(double omega1, double omega2, double r1, double r2,
                                 double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("wigner01_h: effective frequencies must be > 0");
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double D = omega1 * s2 + omega2 * c2;
  const double Dt = omega1 * c2 + omega2 * s2;
  const double dr = r1 - r2;
  const double eta = D * Dt + s2 * c2 * dr * dr;
  const double h0 = omega1 * omega2 / eta * std::cos(2.0 * alpha);
  const double pre = 2.0 * omega2 * s2 / (eta * eta);
  const double t1 = omega1 * Dt + c2 * r1 * dr;
  const double t2 = omega1 * r2 * s2 + omega2 * r1 * c2;
  const double h1 = pre * (t1 * t1 + t2 * t2);
  const double h2 = pre * (D * D + c2 * c2 * dr * dr);
  const double h3 = pre * (c2 * dr * t1 + D * t2);
  return {h0, h1, h2, h3};
}

ExcitedCoefficients excited_coefficients(double omega1, double omega2, double r1, double r2,
                                         double alpha) {
  ExcitedCoefficients out;
  const auto [f1, f2] = excited_F(omega1, omega2, r1, r2, alpha);
  out.f1 = f1;
  out.f2 = f2;
  const auto h = wigner01_h(omega1, omega2, r1, r2, alpha);
  out.h0 = h[0];
  out.h1 = h[1];
  out.h2 = h[2];
  out.h3 = h[3];
  return out;
}

ExcitedCoefficients excited_coefficients(const TwoModeState& state) {
  return excited_coefficients(state.mode1.omega_eff, state.mode2.omega_eff,
                              state.mode1.log_deriv, state.mode2.log_deriv, state.alpha);
}

double mixedness_ratio(const ExcitedCoefficients& coeffs, const ReducedGaussian& g) {
  if (g.party != Party::A)
    throw std::invalid_argument("mixedness_ratio: expects the party-A reduced density");
  const double a1 = g.a1, a3 = g.a3;
  const double re_sum = 2.0 * coeffs.f1.real();  // F1 + F1*
  const double abs2 = std::norm(coeffs.f1);
  const double f2 = coeffs.f2;
  const double cos2 = std::cos(g.alpha) * std::cos(g.alpha);
  const double term1 = cos2 * cos2 / (4.0 * g.d * g.d);
  const double term2 =
      cos2 / (4.0 * g.d * a1 * (a1 + 2.0 * a3)) * (re_sum * a1 + (re_sum + f2) * a3);
  const double denom = 16.0 * a1 * a1 * (a1 + 2.0 * a3) * (a1 + 2.0 * a3);
  const double term3 =
      (a1 * a1 * (re_sum * re_sum + 4.0 * abs2 + f2 * f2) +
       a3 * a3 * (3.0 * re_sum * re_sum + 3.0 * f2 * (2.0 * re_sum + f2)) +
       2.0 * a1 * a3 * (re_sum * re_sum + 4.0 * abs2 + f2 * (3.0 * re_sum + f2))) /
      denom;
  return 4.0 * g.omega2 * g.omega2 * (term1 + term2 + term3);
}

double uncertainty_gamma(const ExcitedCoefficients& coeffs, const WignerForm& m) {
  const double g = m.omega1 * m.omega2 / m.eta_bar;  // alpha1 alpha2 - alpha3^2
  const double a1 = m.alpha1, a2 = m.alpha2, a3 = m.alpha3;
  const double h0 = coeffs.h0, h1 = coeffs.h1, h2 = coeffs.h2, h3 = coeffs.h3;
  const double bracket_x =
      (h0 * a2 + 0.5 * h2) + 1.5 / g * (h1 * a2 * a2 + h2 * a3 * a3 + 2.0 * h3 * a2 * a3);
  const double bracket_p =
      (h0 * a1 + 0.5 * h1) + 1.5 / g * (h2 * a1 * a1 + h1 * a3 * a3 + 2.0 * h3 * a1 * a3);
  return bracket_x * bracket_p / (g * g);
}

}  // namespace oscent
