#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "oscent/gaussian.hpp"
#include "test_util.hpp"

using namespace oscent;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("reduced_A coefficients") {
  const auto g0 = reduced_A(1.0, 4.0, 0.0, 0.0, 0.0);
  check_close(g0.a1, 0.5, 1e-15);
  CHECK(g0.a2 == 0.0);
  CHECK(g0.a3 == 0.0);

  const auto g = reduced_A(1.0, 4.0, 0.0, 0.0, kPi / 4);
  check_close(g.d, 2.5, 1e-15);
  check_close(g.a1, 0.8, 1e-15);
  check_close(g.a3, 0.225, 1e-15);

  const auto h = reduced_A(1.0, 1.0, 0.3, -0.2, kPi / 4);
  check_close(h.a3, 0.015625, 1e-15);  // only (r1 - r2)^2 survives
}

TEST_CASE("reduced_B coefficients") {
  const auto g0 = reduced_B(1.0, 4.0, 0.0, 0.0, 0.0);
  check_close(g0.a1, 2.0, 1e-15);  // d_tilde = 1
  CHECK(g0.a3 == 0.0);

  const auto a = reduced_A(1.0, 4.0, 0.0, 0.0, kPi / 4);
  const auto b = reduced_B(1.0, 4.0, 0.0, 0.0, kPi / 4);
  check_close(a.a1, b.a1, 1e-15);  // pi/4 symmetry of sin^2, cos^2
  check_close(a.a3, b.a3, 1e-15);

  const auto a8 = reduced_A(1.0, 4.0, 0.0, 0.0, kPi / 8);
  const auto b8 = reduced_B(1.0, 4.0, 0.0, 0.0, kPi / 8);
  check_rel(b8.a3 / a8.a3, a8.d / a8.d_tilde, 1e-12);  // ratio forced by the kernels
}

TEST_CASE("purity: closed values and party symmetry") {
  const auto pure = reduced_A(1.0, 4.0, 0.1, -0.4, 0.0);
  check_close(purity(pure), 1.0, 1e-15);

  const auto g = reduced_A(1.0, 4.0, 0.0, 0.0, kPi / 4);
  check_close(purity(g), 0.8, 1e-14);  // 2 sqrt(w1 w2) / (w1 + w2)

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> w(0.05, 10.0), r(-3.0, 3.0), al(-kPi / 4, kPi / 4);
  for (int k = 0; k < 1000; ++k) {
    const double w1 = w(rng), w2 = w(rng), r1 = r(rng), r2 = r(rng), a = al(rng);
    const double pa = purity(reduced_A(w1, w2, r1, r2, a));
    const double pb = purity(reduced_B(w1, w2, r1, r2, a));
    CHECK(std::abs(pa - pb) <= 1e-12);
    CHECK(pa > 0.0);
    CHECK(pa <= 1.0 + 1e-15);
  }
}

TEST_CASE("purity agrees with the eta_bar form") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> w(0.05, 10.0), r(-3.0, 3.0), al(-kPi / 4, kPi / 4);
  for (int k = 0; k < 1000; ++k) {
    const auto g = reduced_A(w(rng), w(rng), r(rng), r(rng), al(rng));
    const double via_eta = std::sqrt(g.omega1 * g.omega2 / g.eta_bar);
    check_rel(purity(g), via_eta, 1e-10);
  }
}

TEST_CASE("static alpha scan: purity max at 0, min at |pi/4|") {
  // 181-point scan over [-pi/4, pi/4]
  int argmax = -1, argmin = -1;
  double best = -1.0, worst = 2.0;
  for (int k = 0; k < 181; ++k) {
    const double a = -kPi / 4 + kPi / 2 * k / 180.0;
    const double p = purity(reduced_A(1.0, 4.0, 0.0, 0.0, a));
    if (p > best) best = p, argmax = k;
    if (p < worst) worst = p, argmin = k;
  }
  CHECK(argmax == 90);  // alpha = 0
  check_close(best, 1.0, 1e-14);
  CHECK((argmin == 0 || argmin == 180));
  const double p_left = purity(reduced_A(1.0, 4.0, 0.0, 0.0, -kPi / 4));
  const double p_right = purity(reduced_A(1.0, 4.0, 0.0, 0.0, kPi / 4));
  check_close(p_left, p_right, 1e-14);
}

TEST_CASE("reduced density rejects nonpositive frequencies") {
  CHECK_THROWS_AS(reduced_A(0.0, 1.0, 0.0, 0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(reduced_B(1.0, -2.0, 0.0, 0.0, 0.1), std::domain_error);
}
