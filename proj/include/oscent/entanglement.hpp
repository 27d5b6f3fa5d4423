#pragma once

#include <complex>

#include "oscent/gaussian.hpp"

namespace oscent {

// Spectral decomposition of the reduced Gaussian: eigenvalues form the
// geometric family p_n = (1 - xi) xi^n with eigenfunctions of inverse width
// epsilon carrying the a2 phase.
struct SpectralData {
  double epsilon = 0.0;  // 2 sqrt((a1+a3)^2 - a3^2)
  double xi = 0.0;       // a3 / (a1 + a3 + epsilon/2), in [0, 1)
  Party party = Party::A;
};

SpectralData spectral(const ReducedGaussian& g);

double eigenvalue(int n, const SpectralData& s);  // p_n

// Order-n Renyi entropy, n >= 2 (nats). Throws std::invalid_argument for
// n < 2.
double renyi_entropy(const SpectralData& s, int order);

double von_neumann_entropy(const SpectralData& s);

// Normalized eigenfunction f_n(x) of the reduced density matrix; a2 is the
// phase coefficient of the corresponding ReducedGaussian.
std::complex<double> eigenfunction(int n, double x, const SpectralData& s, double a2);

// Bi-orthogonal (Schmidt) data of the joint vacuum state. theta is resolved
// four-quadrant on the (Z1, Z2) direction oriented by the sign of
// sin(alpha) cos(alpha); phi stays on the principal branch (its denominator
// Z1^2 + kappa Z2^2 is positive).
struct SchmidtData {
  double kappa = 1.0;  // >= 1; purity equals 1/kappa
  double z1 = 0.0;     // omega1' - omega2'
  double z2 = 0.0;     // (r1 - r2) / kappa
  double theta = 0.0;
  double phi = 0.0;
};

SchmidtData schmidt_data(double omega1, double omega2, double r1, double r2, double alpha);
SchmidtData schmidt_data(const TwoModeState& state);

// Smallest N with xi^N < tail_tol (N >= 1).
int schmidt_truncation(double xi, double tail_tol = 1e-10);

// Sum of the first `terms` Schmidt terms at (x1, x2), including the mode
// phases; matches the direct product-basis wavefunction. Throws
// std::invalid_argument when xi^terms >= 1e-10 (insufficient truncation).
std::complex<double> schmidt_reconstruct(double x1, double x2, const TwoModeState& state,
                                         int terms);

}  // namespace oscent
