#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "oscent/model.hpp"

namespace oscent {

// Scale-factor dynamics: b(t) solves  b'' + wt^2(t) b = wt^2(0) / b^3  with
// b(0) = 1, b'(0) = 0. Closed forms cover the piecewise-constant schedules;
// an adaptive RK45 integrator covers everything else.

// Instantaneous quench to a positive final frequency.
double quench_b(double omega_i, double omega_f, double t);     // throws if omega_f <= 0
double quench_bdot(double omega_i, double omega_f, double t);
double quench_bddot(double omega_i, double omega_f, double t);
double quench_tau(double omega_i, double omega_f, double t);   // analytic phase time

// Final frequency zero (free spreading).
double free_b(double omega_i, double t);
double free_bdot(double omega_i, double t);
double free_bddot(double omega_i, double t);
double free_tau(double omega_i, double t);

// Imaginary final frequency of magnitude omega_f (inverted regime).
double inverted_b(double omega_i, double omega_f, double t);
double inverted_bdot(double omega_i, double omega_f, double t);
double inverted_bddot(double omega_i, double omega_f, double t);
double inverted_tau(double omega_i, double omega_f, double t);

struct ModeSchedule {
  double initial_sq = 1.0;  // wt^2(0), must be > 0
  double final_sq = 1.0;    // wt^2 for t > 0; zero or negative allowed
  // General schedule wt^2(t); when set it overrides the piecewise-constant
  // fields and routes to the numerical integrator.
  std::function<double(double)> omega_sq;

  bool piecewise_constant() const { return !omega_sq; }
};

// Per-mode schedules implied by a resolved model.
ModeSchedule mode_schedule(const NormalModes& model, int mode_index);

struct ErmakovTrajectory {
  int mode = 1;
  double omega0 = 0.0;         // wt(0)
  double ground_energy = 0.0;  // wt(0) / 2
  std::vector<double> t;
  std::vector<double> b;
  std::vector<double> bdot;
  std::vector<double> tau;        // integral of 1/b^2
  std::vector<double> omega_eff;  // wt(0) / b^2

  std::size_t size() const { return t.size(); }
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what, double t_last)
      : std::runtime_error(what), last_time(t_last) {}
  double last_time = 0.0;
};

// t_grid must start at 0 and be strictly increasing. Closed-form schedules
// evaluate b and bdot analytically; tau is accumulated by composite Simpson
// with substep <= 1e-3 of the dominant period. General schedules integrate
// with RK45 at abs/rel tolerance 1e-10.
ErmakovTrajectory solve_ermakov(const ModeSchedule& schedule, std::span<const double> t_grid,
                                int mode_index = 1);

// Snapshot of both modes at one time.
struct ModeState {
  double omega_eff = 0.0;  // wt(0) / b^2
  double log_deriv = 0.0;  // bdot / b
  double tau = 0.0;
  double omega0 = 0.0;     // wt(0)
};

struct TwoModeState {
  ModeState mode1, mode2;
  double alpha = 0.0;
};

TwoModeState state_at(const ErmakovTrajectory& mode1, const ErmakovTrajectory& mode2,
                      double alpha, std::size_t index);

// Debug dump, fixed column order: t,b,b_dot,tau,omega_eff.
void write_trajectory_csv(const ErmakovTrajectory& trajectory, std::ostream& os);

// Exact state of a piecewise-constant model at an arbitrary time (closed-form
// b, bdot and analytic tau). Throws for tabulated models.
TwoModeState sample_state(const NormalModes& model, double t);

}  // namespace oscent
