#include "oscent/ermakov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace oscent {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTauStepFraction = 1e-3;  // Simpson substep <= 1e-3 * dominant period

void check_quench_args(double omega_f) {
  if (omega_f <= 0.0)
    throw std::domain_error(
        "quench_b: omega_f must be > 0 (use free_b for omega_f = 0 or inverted_b for an "
        "imaginary final frequency)");
}

}  // namespace

double quench_b(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double b2 = (wf2 - wi2) / (2.0 * wf2) * std::cos(2.0 * omega_f * t) +
                    (wf2 + wi2) / (2.0 * wf2);
  return std::sqrt(b2);
}

double quench_bdot(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double db2 = -((wf2 - wi2) / omega_f) * std::sin(2.0 * omega_f * t);
  return db2 / (2.0 * quench_b(omega_i, omega_f, t));
}

double quench_bddot(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double ddb2 = -2.0 * (wf2 - wi2) * std::cos(2.0 * omega_f * t);
  const double b = quench_b(omega_i, omega_f, t);
  const double bd = quench_bdot(omega_i, omega_f, t);
  return (ddb2 - 2.0 * bd * bd) / (2.0 * b);
}

double quench_tau(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  // Continued antiderivative of 1 / b^2.
  const double k = std::floor(omega_f * t / kPi + 0.5);
  return (std::atan((omega_i / omega_f) * std::tan(omega_f * t - k * kPi)) + k * kPi) / omega_i;
}

double free_b(double omega_i, double t) {
  return std::sqrt(1.0 + omega_i * omega_i * t * t);
}

double free_bdot(double omega_i, double t) {
  return omega_i * omega_i * t / free_b(omega_i, t);
}

double free_bddot(double omega_i, double t) {
  const double b = free_b(omega_i, t);
  const double bd = free_bdot(omega_i, t);
  return (omega_i * omega_i - bd * bd) / b;
}

double free_tau(double omega_i, double t) { return std::atan(omega_i * t) / omega_i; }

double inverted_b(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double b2 = (wf2 + wi2) / (2.0 * wf2) * std::cosh(2.0 * omega_f * t) +
                    (wf2 - wi2) / (2.0 * wf2);
  return std::sqrt(b2);
}

double inverted_bdot(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double db2 = ((wf2 + wi2) / omega_f) * std::sinh(2.0 * omega_f * t);
  return db2 / (2.0 * inverted_b(omega_i, omega_f, t));
}

double inverted_bddot(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  const double wf2 = omega_f * omega_f, wi2 = omega_i * omega_i;
  const double ddb2 = 2.0 * (wf2 + wi2) * std::cosh(2.0 * omega_f * t);
  const double b = inverted_b(omega_i, omega_f, t);
  const double bd = inverted_bdot(omega_i, omega_f, t);
  return (ddb2 - 2.0 * bd * bd) / (2.0 * b);
}

double inverted_tau(double omega_i, double omega_f, double t) {
  check_quench_args(omega_f);
  return std::atan((omega_i / omega_f) * std::tanh(omega_f * t)) / omega_i;
}

ModeSchedule mode_schedule(const NormalModes& model, int mode_index) {
  if (mode_index != 1 && mode_index != 2)
    throw std::invalid_argument("mode_schedule: mode_index must be 1 or 2");
  ModeSchedule s;
  if (!model.tabulated()) {
    s.initial_sq = mode_index == 1 ? model.mode1_initial_sq : model.mode2_initial_sq;
    s.final_sq = mode_index == 1 ? model.mode1_final_sq : model.mode2_final_sq;
    return s;
  }
  // Linear interpolation of the sampled normal-mode trajectory, clamped at
  // the endpoints.
  const std::vector<double> times = model.times;
  const std::vector<double> vals = mode_index == 1 ? model.mode1_sq : model.mode2_sq;
  s.initial_sq = vals.front();
  s.final_sq = vals.back();
  s.omega_sq = [times, vals](double t) {
    if (t <= times.front()) return vals.front();
    if (t >= times.back()) return vals.back();
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - times.begin());
    const double w = (t - times[k - 1]) / (times[k] - times[k - 1]);
    return (1.0 - w) * vals[k - 1] + w * vals[k];
  };
  return s;
}

namespace {

enum class ClosedForm { Constant, Quench, Free, Inverted };

ClosedForm classify(const ModeSchedule& s) {
  if (s.final_sq == s.initial_sq) return ClosedForm::Constant;
  if (s.final_sq > 0.0) return ClosedForm::Quench;
  if (s.final_sq == 0.0) return ClosedForm::Free;
  return ClosedForm::Inverted;
}

struct ClosedEval {
  ClosedForm form;
  double omega0;   // sqrt(initial_sq)
  double omega_f;  // magnitude of final frequency (quench/inverted)

  double b(double t) const {
    switch (form) {
      case ClosedForm::Constant: return 1.0;
      case ClosedForm::Quench: return quench_b(omega0, omega_f, t);
      case ClosedForm::Free: return free_b(omega0, t);
      case ClosedForm::Inverted: return inverted_b(omega0, omega_f, t);
    }
    return 1.0;
  }
  double bdot(double t) const {
    switch (form) {
      case ClosedForm::Constant: return 0.0;
      case ClosedForm::Quench: return quench_bdot(omega0, omega_f, t);
      case ClosedForm::Free: return free_bdot(omega0, t);
      case ClosedForm::Inverted: return inverted_bdot(omega0, omega_f, t);
    }
    return 0.0;
  }
  double tau(double t) const {
    switch (form) {
      case ClosedForm::Constant: return t;
      case ClosedForm::Quench: return quench_tau(omega0, omega_f, t);
      case ClosedForm::Free: return free_tau(omega0, t);
      case ClosedForm::Inverted: return inverted_tau(omega0, omega_f, t);
    }
    return t;
  }
  // Characteristic time scale for quadrature stepping.
  double dominant_period() const {
    switch (form) {
      case ClosedForm::Constant: return 2.0 * kPi / omega0;
      case ClosedForm::Quench: return kPi / omega_f;
      case ClosedForm::Free: return 1.0 / omega0;
      case ClosedForm::Inverted: return 1.0 / (2.0 * omega_f);
    }
    return 1.0;
  }
};

ClosedEval make_closed(const ModeSchedule& s) {
  ClosedEval c;
  c.form = classify(s);
  c.omega0 = std::sqrt(s.initial_sq);
  c.omega_f = c.form == ClosedForm::Quench    ? std::sqrt(s.final_sq)
              : c.form == ClosedForm::Inverted ? std::sqrt(-s.final_sq)
                                               : 0.0;
  return c;
}

void check_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("solve_ermakov: empty time grid");
  if (t_grid.front() != 0.0) throw std::invalid_argument("solve_ermakov: grid must start at 0");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (t_grid[k] <= t_grid[k - 1])
      throw std::invalid_argument("solve_ermakov: grid must strictly increase");
}

// Composite Simpson of f over [a, b] with an even number of substeps of size
// at most h_max.
template <class F>
double simpson(const F& f, double a, double b, double h_max) {
  const double len = b - a;
  int n = static_cast<int>(std::ceil(len / h_max));
  n += n % 2;
  n = std::max(n, 2);
  const double h = len / n;
  double odd = 0.0, even = 0.0;
  for (int k = 1; k < n; k += 2) odd += f(a + k * h);
  for (int k = 2; k < n; k += 2) even += f(a + k * h);
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

ErmakovTrajectory solve_closed_form(const ModeSchedule& s, std::span<const double> t_grid,
                                    int mode_index) {
  const ClosedEval c = make_closed(s);
  ErmakovTrajectory out;
  out.mode = mode_index;
  out.omega0 = c.omega0;
  out.ground_energy = 0.5 * c.omega0;
  const std::size_t n = t_grid.size();
  out.t.assign(t_grid.begin(), t_grid.end());
  out.b.resize(n);
  out.bdot.resize(n);
  out.tau.resize(n);
  out.omega_eff.resize(n);

  const double h_max = kTauStepFraction * c.dominant_period();
  const auto inv_b2 = [&c](double t) {
    const double b = c.b(t);
    return 1.0 / (b * b);
  };
  double tau_acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_grid[k];
    out.b[k] = k == 0 ? 1.0 : c.b(t);
    out.bdot[k] = k == 0 ? 0.0 : c.bdot(t);
    if (k > 0) tau_acc += simpson(inv_b2, t_grid[k - 1], t, h_max);
    out.tau[k] = tau_acc;
    out.omega_eff[k] = c.omega0 / (out.b[k] * out.b[k]);
  }
  return out;
}

// Dormand-Prince 5(4) step on y = (b, bdot).
struct Rk45 {
  std::function<double(double)> omega_sq;
  double omega0_sq;
  double atol = 1e-10, rtol = 1e-10;

  std::array<double, 2> rhs(double t, const std::array<double, 2>& y) const {
    const double b3 = y[0] * y[0] * y[0];
    return {y[1], omega0_sq / b3 - omega_sq(t) * y[0]};
  }

  // One accepted adaptive step from (t, y), not exceeding t_stop. Updates
  // t, y, h. Throws SolverError on step-size underflow.
  void step(double& t, std::array<double, 2>& y, double& h, double t_stop) const {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200, e6 = 11.0 / 84 - 187.0 / 2100,
                            e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    for (int attempt = 0; attempt < 60; ++attempt) {
      h = std::min(h, t_stop - t);
      if (h < 1e-14 * std::max(1.0, std::abs(t)))
        throw SolverError("ermakov integrator: step size underflow", t);
      const auto k1 = rhs(t, y);
      const auto at = [&](double c, const std::array<double, 2>& dy) {
        return rhs(t + c * h, {y[0] + h * dy[0], y[1] + h * dy[1]});
      };
      const auto k2 = at(c2, {a21 * k1[0], a21 * k1[1]});
      const auto k3 = at(c3, {a31 * k1[0] + a32 * k2[0], a31 * k1[1] + a32 * k2[1]});
      const auto k4 = at(c4, {a41 * k1[0] + a42 * k2[0] + a43 * k3[0],
                              a41 * k1[1] + a42 * k2[1] + a43 * k3[1]});
      const auto k5 = at(c5, {a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0],
                              a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1]});
      const auto k6 =
          at(1.0, {a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0],
                   a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1]});
      const std::array<double, 2> ynew = {
          y[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
          y[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1])};
      const auto k7 = rhs(t + h, ynew);
      double err = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                               e7 * k7[i]);
        const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err += (ei / scale) * (ei / scale);
      }
      err = std::sqrt(0.5 * err);
      if (err <= 1.0 || h <= 1e-13 * std::max(1.0, std::abs(t))) {
        t += h;
        y = ynew;
        const double grow = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
        h *= std::clamp(grow, 0.2, 5.0);
        return;
      }
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }
    throw SolverError("ermakov integrator: step control failed to converge", t);
  }
};

ErmakovTrajectory solve_numeric(const ModeSchedule& s, std::span<const double> t_grid,
                                int mode_index) {
  ErmakovTrajectory out;
  out.mode = mode_index;
  out.omega0 = std::sqrt(s.initial_sq);
  out.ground_energy = 0.5 * out.omega0;
  const std::size_t n = t_grid.size();
  out.t.assign(t_grid.begin(), t_grid.end());
  out.b.resize(n);
  out.bdot.resize(n);
  out.tau.resize(n);
  out.omega_eff.resize(n);

  Rk45 stepper;
  stepper.omega_sq = s.omega_sq;
  stepper.omega0_sq = s.initial_sq;

  // Substep target: resolve the fastest frequency present on the grid so the
  // Simpson accumulation of tau keeps its accuracy budget.
  double max_wsq = s.initial_sq;
  for (double t : t_grid) max_wsq = std::max(max_wsq, std::abs(s.omega_sq(t)));
  const double period = 2.0 * kPi / std::sqrt(std::max(max_wsq, 1e-12));
  const double h_sub = kTauStepFraction * period;
  const double span = t_grid.back() - t_grid.front();
  if (h_sub < span / 5e6)
    throw SolverError("ermakov integrator: schedule needs an unresolvable step size", 0.0);

  double t = 0.0;
  std::array<double, 2> y = {1.0, 0.0};
  double h = h_sub;
  long steps = 0;
  const auto integrate_to = [&](double target) {
    while (t < target) {
      stepper.step(t, y, h, target);
      if (++steps > 20000000)
        throw SolverError("ermakov integrator: step budget exhausted (stiff schedule)", t);
      if (target - t <= 1e-13 * std::max(1.0, std::abs(target))) {
        t = target;
        break;
      }
    }
  };

  out.b[0] = 1.0;
  out.bdot[0] = 0.0;
  out.tau[0] = 0.0;
  out.omega_eff[0] = out.omega0;

  double tau_acc = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double a = t_grid[k - 1], b_end = t_grid[k];
    const long panels = std::max(1L, static_cast<long>(std::ceil((b_end - a) / h_sub)));
    const double hp = (b_end - a) / panels;
    for (long p = 0; p < panels; ++p) {
      const double t0 = a + p * hp;
      const double t1 = p + 1 == panels ? b_end : t0 + hp;
      const double b0 = y[0];
      integrate_to(t0 + 0.5 * hp);
      const double bm = y[0];
      integrate_to(t1);
      const double b1v = y[0];
      tau_acc += hp / 6.0 * (1.0 / (b0 * b0) + 4.0 / (bm * bm) + 1.0 / (b1v * b1v));
    }
    out.b[k] = y[0];
    out.bdot[k] = y[1];
    out.tau[k] = tau_acc;
    out.omega_eff[k] = out.omega0 / (y[0] * y[0]);
    if (!(y[0] > 0.0))
      throw SolverError("ermakov integrator: scale factor left the positive domain", t);
  }
  return out;
}

}  // namespace

ErmakovTrajectory solve_ermakov(const ModeSchedule& schedule, std::span<const double> t_grid,
                                int mode_index) {
  if (schedule.initial_sq <= 0.0)
    throw std::domain_error("solve_ermakov: initial frequency squared must be > 0");
  check_grid(t_grid);
  if (schedule.piecewise_constant()) return solve_closed_form(schedule, t_grid, mode_index);
  return solve_numeric(schedule, t_grid, mode_index);
}

TwoModeState state_at(const ErmakovTrajectory& mode1, const ErmakovTrajectory& mode2,
                      double alpha, std::size_t index) {
  if (index >= mode1.size() || index >= mode2.size())
    throw std::out_of_range("state_at: index past trajectory end");
  TwoModeState st;
  st.alpha = alpha;
  st.mode1 = {mode1.omega_eff[index], mode1.bdot[index] / mode1.b[index], mode1.tau[index],
              mode1.omega0};
  st.mode2 = {mode2.omega_eff[index], mode2.bdot[index] / mode2.b[index], mode2.tau[index],
              mode2.omega0};
  return st;
}

void write_trajectory_csv(const ErmakovTrajectory& trajectory, std::ostream& os) {
  os << "t,b,b_dot,tau,omega_eff\n";
  char buf[220];
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", trajectory.t[k],
                  trajectory.b[k], trajectory.bdot[k], trajectory.tau[k],
                  trajectory.omega_eff[k]);
    os << buf;
  }
}

TwoModeState sample_state(const NormalModes& model, double t) {
  if (model.tabulated())
    throw std::invalid_argument("sample_state: tabulated models need solve_ermakov");
  TwoModeState st;
  st.alpha = model.alpha;
  for (int mode = 1; mode <= 2; ++mode) {
    const ClosedEval c = make_closed(mode_schedule(model, mode));
    const double b = c.b(t);
    ModeState ms;
    ms.omega0 = c.omega0;
    ms.omega_eff = c.omega0 / (b * b);
    ms.log_deriv = c.bdot(t) / b;
    ms.tau = c.tau(t);
    (mode == 1 ? st.mode1 : st.mode2) = ms;
  }
  return st;
}

}  // namespace oscent
