#pragma once

#include "oscent/ermakov.hpp"

namespace oscent {

enum class Party { A, B };

// Vacuum-sector reduced density matrix of one oscillator, as the Gaussian
// kernel  sqrt(2 a1/pi) exp[-((a1+a3) - i a2) x^2 - ((a1+a3) + i a2) x'^2
// + 2 a3 x x'].
struct ReducedGaussian {
  Party party = Party::A;
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double d = 0.0;        // omega1' sin^2(a) + omega2' cos^2(a)
  double d_tilde = 0.0;  // omega1' cos^2(a) + omega2' sin^2(a)
  double eta_bar = 0.0;  // d * d_tilde + sin^2 cos^2 (r1 - r2)^2
  double omega1 = 0.0, omega2 = 0.0;  // effective mode frequencies used
  double alpha = 0.0;                 // rotation angle used
};

// omega1/omega2 are the effective frequencies omega_j' > 0, r1/r2 the
// logarithmic derivatives bdot_j / b_j.
ReducedGaussian reduced_A(double omega1, double omega2, double r1, double r2, double alpha);
ReducedGaussian reduced_B(double omega1, double omega2, double r1, double r2, double alpha);
ReducedGaussian reduced_density(Party party, const TwoModeState& state);

// Tr[rho^2] = sqrt(a1 / (a1 + 2 a3)) = sqrt(omega1' omega2' / eta_bar),
// in (0, 1]; party-symmetric.
double purity(const ReducedGaussian& g);

}  // namespace oscent
