#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "oscent/ermakov.hpp"
#include "oscent/gaussian.hpp"

namespace oscent {

// Independent numerical verification layer: exact wavefunctions sampled on
// grids, discretized partial trace and eigendecomposition, quadrature-based
// entropies, purities, moments and Wigner values.

struct GridSpec {
  double half_width = 8.0;
  int points = 257;  // odd

  double spacing() const { return 2.0 * half_width / (points - 1); }
};

// Half-width = width_sigmas * max position standard deviation of the (n, m)
// product state, per axis.
std::pair<GridSpec, GridSpec> default_grids(const TwoModeState& state, int n = 0, int m = 0,
                                            int points = 257, double width_sigmas = 8.0);

std::vector<double> grid_points(const GridSpec& g);

// psi_{n,m}(x1, x2) at time implied by the state snapshot.
std::complex<double> eval_psi(int n, int m, double x1, double x2, const TwoModeState& state);

using PsiGrid = Eigen::MatrixXcd;  // (i, j) = psi(x1_i, x2_j)

PsiGrid sample_psi(int n, int m, const TwoModeState& state, const GridSpec& axis1,
                   const GridSpec& axis2);

// Kernel samples rho(x_i, x_j) of the reduced density of the kept party;
// Delta * matrix is the trace-class discretization.
struct DiscretizedDensity {
  Eigen::MatrixXcd rho;
  double spacing = 0.0;
};

// Throws std::runtime_error when the discretized trace deviates from 1 by
// more than 1e-4 (grid inadequacy).
DiscretizedDensity partial_trace(const PsiGrid& psi, Party kept, const GridSpec& axis1,
                                 const GridSpec& axis2);

double grid_trace(const DiscretizedDensity& d);
double grid_purity(const DiscretizedDensity& d);  // Tr[(Delta rho)^2]

// Eigenvalues of the Delta-scaled kernel, descending.
std::vector<double> grid_spectrum(const DiscretizedDensity& d);

// -sum lambda ln lambda over eigenvalues above the 1e-12 clip.
double grid_entropy(std::span<const double> eigenvalues);

// (<x1^2>, <p1^2>) of the two-mode state: position moment by quadrature,
// momentum moment via |d psi/d x1|^2 with spectral (trigonometric)
// differentiation on the periodic extension.
std::pair<double, double> grid_moments(const PsiGrid& psi, const GridSpec& axis1,
                                       const GridSpec& axis2);

// Wigner value W(x_i, p) of a discretized 1D density by the anti-diagonal
// Fourier sum.
double wigner_from_density(const DiscretizedDensity& d, int index, double p);

}  // namespace oscent
