#include "oscent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscent/hermite.hpp"

namespace oscent {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::pair<GridSpec, GridSpec> default_grids(const TwoModeState& state, int n, int m, int points,
                                            double width_sigmas) {
  if (points < 65 || points % 2 == 0)
    throw std::invalid_argument("default_grids: points must be odd and >= 65");
  const double c2 = std::cos(state.alpha) * std::cos(state.alpha);
  const double s2 = std::sin(state.alpha) * std::sin(state.alpha);
  const double w1 = state.mode1.omega_eff, w2 = state.mode2.omega_eff;
  // Position variances of the product state in the rotated modes.
  const double var_mode1 = (n + 0.5) / w1;
  const double var_mode2 = (m + 0.5) / w2;
  const double var1 = c2 * var_mode1 + s2 * var_mode2;
  const double var2 = s2 * var_mode1 + c2 * var_mode2;
  GridSpec g1{width_sigmas * std::sqrt(var1), points};
  GridSpec g2{width_sigmas * std::sqrt(var2), points};
  return {g1, g2};
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> x(g.points);
  const double d = g.spacing();
  for (int i = 0; i < g.points; ++i) x[i] = -g.half_width + i * d;
  return x;
}

std::complex<double> eval_psi(int n, int m, double x1, double x2, const TwoModeState& state) {
  const double s = std::sin(state.alpha), c = std::cos(state.alpha);
  const double u = x1 * c - x2 * s;
  const double v = x1 * s + x2 * c;
  const double w1 = state.mode1.omega_eff, w2 = state.mode2.omega_eff;
  const double amp = std::pow(w1, 0.25) * hermite_function(n, std::sqrt(w1) * u) *
                     std::pow(w2, 0.25) * hermite_function(m, std::sqrt(w2) * v);
  const double energy_phase = -((n + 0.5) * state.mode1.omega0 * state.mode1.tau +
                                (m + 0.5) * state.mode2.omega0 * state.mode2.tau);
  const double gauge = 0.5 * (state.mode1.log_deriv * u * u + state.mode2.log_deriv * v * v);
  return amp * std::exp(std::complex<double>(0.0, energy_phase + gauge));
}

PsiGrid sample_psi(int n, int m, const TwoModeState& state, const GridSpec& axis1,
                   const GridSpec& axis2) {
  const auto x1 = grid_points(axis1);
  const auto x2 = grid_points(axis2);
  PsiGrid psi(axis1.points, axis2.points);
  for (int i = 0; i < axis1.points; ++i)
    for (int j = 0; j < axis2.points; ++j) psi(i, j) = eval_psi(n, m, x1[i], x2[j], state);
  return psi;
}

DiscretizedDensity partial_trace(const PsiGrid& psi, Party kept, const GridSpec& axis1,
                                 const GridSpec& axis2) {
  DiscretizedDensity d;
  if (kept == Party::A) {
    d.rho = psi * psi.adjoint() * axis2.spacing();
    d.spacing = axis1.spacing();
  } else {
    d.rho = psi.transpose() * psi.conjugate() * axis1.spacing();
    d.spacing = axis2.spacing();
  }
  const double tr = grid_trace(d);
  if (std::abs(tr - 1.0) > 1e-4)
    throw std::runtime_error("partial_trace: grid inadequate, discretized trace = " +
                             std::to_string(tr));
  return d;
}

double grid_trace(const DiscretizedDensity& d) {
  return d.rho.trace().real() * d.spacing;
}

double grid_purity(const DiscretizedDensity& d) {
  return d.rho.squaredNorm() * d.spacing * d.spacing;
}

std::vector<double> grid_spectrum(const DiscretizedDensity& d) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d.rho * d.spacing,
                                                     Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + d.rho.rows());
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

double grid_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lam : eigenvalues)
    if (lam > 1e-12) s -= lam * std::log(lam);
  return s;
}

namespace {

// Spectral differentiation matrix for the periodic trigonometric interpolant
// on an odd-size uniform grid with period N * spacing.
Eigen::MatrixXd spectral_diff_matrix(int n, double spacing) {
  const double period = n * spacing;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      const double sign = ((j - k) % 2 == 0) ? 1.0 : -1.0;
      d(j, k) = (kPi / period) * sign / std::sin(kPi * (j - k) / n);
    }
  return d;
}

}  // namespace

std::pair<double, double> grid_moments(const PsiGrid& psi, const GridSpec& axis1,
                                       const GridSpec& axis2) {
  const auto x1 = grid_points(axis1);
  const double cell = axis1.spacing() * axis2.spacing();
  double x_sq = 0.0;
  for (int i = 0; i < axis1.points; ++i) {
    double row = 0.0;
    for (int j = 0; j < axis2.points; ++j) row += std::norm(psi(i, j));
    x_sq += x1[i] * x1[i] * row;
  }
  x_sq *= cell;

  const Eigen::MatrixXd diff = spectral_diff_matrix(axis1.points, axis1.spacing());
  const Eigen::MatrixXcd dpsi = diff * psi;
  const double p_sq = dpsi.squaredNorm() * cell;
  return {x_sq, p_sq};
}

double wigner_from_density(const DiscretizedDensity& d, int index, double p) {
  const int n = static_cast<int>(d.rho.rows());
  if (index < 0 || index >= n) throw std::out_of_range("wigner_from_density: index");
  const int kmax = std::min(index, n - 1 - index);
  std::complex<double> sum = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    const double y = k * d.spacing;
    sum += std::exp(std::complex<double>(0.0, -2.0 * p * y)) * d.rho(index - k, index + k);
  }
  return sum.real() * d.spacing / kPi;
}

}  // namespace oscent
