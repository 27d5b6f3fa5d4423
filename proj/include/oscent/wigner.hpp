#pragma once

#include <utility>

#include "oscent/ermakov.hpp"

namespace oscent {

// Exponent coefficients of the vacuum Wigner function,
//   W(x1,x2,p1,p2) = pi^-2 exp[-A1 x1^2 - A2 x2^2 - B1 p1^2 - B2 p2^2
//     + 2 A3 x1 x2 + 2 B3 p1 p2 + 2 F (x1 p2 + x2 p1)
//     + 2 D11 x1 p1 + 2 D22 x2 p2],
// and of its single-mode marginal
//   W(x1,p1) = pi^-1 sqrt(w1' w2'/eta) exp[-alpha1 x1^2 - alpha2 p1^2
//     + 2 alpha3 x1 p1].
struct WignerForm {
  double A1 = 0.0, A2 = 0.0, A3 = 0.0;
  double B1 = 0.0, B2 = 0.0, B3 = 0.0;
  double F = 0.0, D11 = 0.0, D22 = 0.0;
  double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
  double eta_bar = 0.0, d = 0.0, d_tilde = 0.0;
  double omega1 = 0.0, omega2 = 0.0, r1 = 0.0, r2 = 0.0, alpha = 0.0;
};

WignerForm wigner_full(double omega1, double omega2, double r1, double r2, double alpha);
WignerForm wigner_marginal(double omega1, double omega2, double r1, double r2, double alpha);
WignerForm wigner_form(const TwoModeState& state);

double wigner_full_value(const WignerForm& w, double x1, double x2, double p1, double p2);
double wigner_marginal_value(const WignerForm& w, double x, double p);

struct SecondMoments {
  double x_sq = 0.0;  // <x1^2>
  double p_sq = 0.0;  // <p1^2>
};

SecondMoments second_moments(const WignerForm& w);

// (Omega, Omega_tilde): four times the squared uncertainty products of
// mode 1 and mode 2; Heisenberg bound is 1.
std::pair<double, double> uncertainty_omega(double omega1, double omega2, double r1, double r2,
                                            double alpha);
std::pair<double, double> uncertainty_omega(const TwoModeState& state);

}  // namespace oscent
