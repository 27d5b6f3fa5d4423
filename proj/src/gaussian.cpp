#include "oscent/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace oscent {

namespace {

ReducedGaussian build(Party party, double omega1, double omega2, double r1, double r2,
                      double alpha) {
  if (omega1 <= 0.0 || omega2 <= 0.0)
    throw std::domain_error("reduced density: effective frequencies must be > 0");
  const double s = std::sin(alpha), c = std::cos(alpha);
  const double s2 = s * s, c2 = c * c;
  ReducedGaussian g;
  g.party = party;
  g.omega1 = omega1;
  g.omega2 = omega2;
  g.alpha = alpha;
  g.d = omega1 * s2 + omega2 * c2;
  g.d_tilde = omega1 * c2 + omega2 * s2;
  const double dr = r1 - r2;
  g.eta_bar = g.d * g.d_tilde + s2 * c2 * dr * dr;
  const double denom = party == Party::A ? g.d : g.d_tilde;
  g.a1 = omega1 * omega2 / (2.0 * denom);
  g.a2 = party == Party::A ? (omega1 * r2 * s2 + omega2 * r1 * c2) / (2.0 * denom)
                           : (omega1 * r2 * c2 + omega2 * r1 * s2) / (2.0 * denom);
  const double dw = omega1 - omega2;
  g.a3 = s2 * c2 * (dw * dw + dr * dr) / (4.0 * denom);
  if (g.a3 < 0.0 && g.a3 > -1e-14) g.a3 = 0.0;  // cancellation guard near alpha = 0
  return g;
}

}  // namespace

ReducedGaussian reduced_A(double omega1, double omega2, double r1, double r2, double alpha) {
  return build(Party::A, omega1, omega2, r1, r2, alpha);
}

ReducedGaussian reduced_B(double omega1, double omega2, double r1, double r2, double alpha) {
  return build(Party::B, omega1, omega2, r1, r2, alpha);
}

ReducedGaussian reduced_density(Party party, const TwoModeState& state) {
  return build(party, state.mode1.omega_eff, state.mode2.omega_eff, state.mode1.log_deriv,
               state.mode2.log_deriv, state.alpha);
}

double purity(const ReducedGaussian& g) { return std::sqrt(g.a1 / (g.a1 + 2.0 * g.a3)); }

}  // namespace oscent
