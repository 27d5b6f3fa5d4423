#include "oscent/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "oscent/hermite.hpp"

namespace oscent {

SpectralData spectral(const ReducedGaussian& g) {
  SpectralData s;
  s.party = g.party;
  const double sum = g.a1 + g.a3;
  s.epsilon = 2.0 * std::sqrt(sum * sum - g.a3 * g.a3);
  s.xi = g.a3 == 0.0 ? 0.0 : g.a3 / (sum + 0.5 * s.epsilon);
  return s;
}

double eigenvalue(int n, const SpectralData& s) {
  if (n < 0) throw std::invalid_argument("eigenvalue: n must be >= 0");
  return (1.0 - s.xi) * std::pow(s.xi, n);
}

double renyi_entropy(const SpectralData& s, int order) {
  if (order < 2) throw std::invalid_argument("renyi_entropy: order must be >= 2");
  if (s.xi == 0.0) return 0.0;
  const double n = order;
  return (n * std::log1p(-s.xi) - std::log1p(-std::pow(s.xi, n))) / (1.0 - n);
}

double von_neumann_entropy(const SpectralData& s) {
  if (s.xi == 0.0) return 0.0;
  return -std::log1p(-s.xi) - s.xi / (1.0 - s.xi) * std::log(s.xi);
}

std::complex<double> eigenfunction(int n, double x, const SpectralData& s, double a2) {
  const double amp = std::pow(s.epsilon, 0.25) * hermite_function(n, std::sqrt(s.epsilon) * x);
  return amp * std::exp(std::complex<double>(0.0, a2 * x * x));
}

SchmidtData schmidt_data(double omega1, double omega2, double r1, double r2, double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("schmidt_data: effective frequencies must be > 0");
  const double s = std::sin(alpha), c = std::cos(alpha);
  const double sc = s * c;
  const double dr = r1 - r2, dw = omega1 - omega2;
  SchmidtData out;
  out.kappa = std::sqrt(1.0 + sc * sc / (omega1 * omega2) * (dw * dw + dr * dr));
  out.z1 = dw;
  out.z2 = dr / out.kappa;
  // Four-quadrant angle of (Z1, Z2), oriented by the sign of sin(a) cos(a);
  // this is the branch the product-basis wavefunction fixes.
  out.theta = sc == 0.0 ? 0.0 : std::atan2(sc * out.z2, sc * out.z1);
  out.phi = std::atan2((out.kappa - 1.0) * out.z1 * out.z2,
                       out.z1 * out.z1 + out.kappa * out.z2 * out.z2);
  return out;
}

SchmidtData schmidt_data(const TwoModeState& state) {
  return schmidt_data(state.mode1.omega_eff, state.mode2.omega_eff, state.mode1.log_deriv,
                      state.mode2.log_deriv, state.alpha);
}

int schmidt_truncation(double xi, double tail_tol) {
  if (xi <= 0.0) return 1;
  if (xi >= 1.0) throw std::domain_error("schmidt_truncation: xi must be < 1");
  const int n = static_cast<int>(std::ceil(std::log(tail_tol) / std::log(xi))) + 1;
  return std::max(n, 1);
}

std::complex<double> schmidt_reconstruct(double x1, double x2, const TwoModeState& state,
                                         int terms) {
  if (terms < 1) throw std::invalid_argument("schmidt_reconstruct: terms must be >= 1");
  const ReducedGaussian gA = reduced_density(Party::A, state);
  const ReducedGaussian gB = reduced_density(Party::B, state);
  const SpectralData sA = spectral(gA);
  const SpectralData sB = spectral(gB);
  if (sA.xi > 0.0 && std::pow(sA.xi, terms) >= 1e-10)
    throw std::invalid_argument("schmidt_reconstruct: truncation insufficient, xi^N >= 1e-10");
  const SchmidtData sd = schmidt_data(state);

  std::complex<double> sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double amp = std::sqrt(eigenvalue(n, sA));
    if (amp == 0.0) break;
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -n * sd.theta));
    sum += amp * phase * eigenfunction(n, x1, sA, gA.a2) * eigenfunction(n, x2, sB, gB.a2);
  }
  const double global = -(state.mode1.omega0 / 2.0 * state.mode1.tau +
                          state.mode2.omega0 / 2.0 * state.mode2.tau) +
                        0.5 * sd.phi;
  return sum * std::exp(std::complex<double>(0.0, global));
}

}  // namespace oscent
