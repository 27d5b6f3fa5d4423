#pragma once

#include <array>
#include <complex>

#include "oscent/gaussian.hpp"
#include "oscent/wigner.hpp"

namespace oscent {

// Coefficients of the (ground, first-excited) sector: the reduced density
// matrix is 2 w2' rho_00 [cos^2(a)/(2D) + F1 x^2 + F1* x'^2 + F2 x x'] and
// its Wigner marginal is W_00 (h0 + h1 x^2 + h2 p^2 + 2 h3 x p).
struct ExcitedCoefficients {
  std::complex<double> f1;
  double f2 = 0.0;
  double h0 = 0.0, h1 = 0.0, h2 = 0.0, h3 = 0.0;
};

std::pair<std::complex<double>, double> excited_F(double omega1, double omega2, double r1,
                                                  double r2, double alpha);

std::array<double, 4> wigner01_h(double omega1, double omega2, double r1, double r2,
                                 double alpha);

ExcitedCoefficients excited_coefficients(double omega1, double omega2, double r1, double r2,
                                         double alpha);
ExcitedCoefficients excited_coefficients(const TwoModeState& state);

// Ratio of mixedness: Tr[rho_01^2] = Tr[rho_00^2] * r.
double mixedness_ratio(const ExcitedCoefficients& coeffs, const ReducedGaussian& g);

// Gamma = 4 <x1^2><p1^2> of the (0,1) marginal; Heisenberg bound is 1.
double uncertainty_gamma(const ExcitedCoefficients& coeffs, const WignerForm& marginal);

}  // namespace oscent
