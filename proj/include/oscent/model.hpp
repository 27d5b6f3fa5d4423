#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oscent {

// Parameter schedules for two coupled oscillators with unit masses (hbar = 1).
// Physical inputs are the angular frequencies omega_1(t), omega_2(t) and the
// bilinear coupling J(t); normal-mode inputs bypass the diagonalization.

enum class ScheduleKind { Toy1, Toy2, Quench, NormalModes, Tabulated };

struct TabulatedSample {
  double t = 0.0;
  double omega1_sq = 0.0;
  double omega2_sq = 0.0;
  double coupling = 0.0;
};

struct FrequencySchedule {
  ScheduleKind kind = ScheduleKind::Quench;

  // quench: instantaneous change omega_{j,i} -> omega_{j,f} at t = 0+, J fixed
  double omega1_i = 0.0, omega1_f = 0.0;
  double omega2_i = 0.0, omega2_f = 0.0;
  double coupling = 0.0;

  // toy1/toy2/normal_modes: rotation angle plus normal-mode endpoint
  // frequencies (not squared). toy1 forces wtilde1_f = 0; toy2 interprets
  // wtilde1_f as the magnitude of an imaginary late-time frequency.
  double alpha = 0.0;
  double wtilde1_i = 0.0, wtilde1_f = 0.0;
  double wtilde2_i = 0.0, wtilde2_f = 0.0;

  std::vector<TabulatedSample> table;  // kind == Tabulated

  static FrequencySchedule quench(double w1i, double w1f, double w2i, double w2f, double J);
  static FrequencySchedule toy1(double alpha, double wt1i, double wt2i, double wt2f);
  static FrequencySchedule toy2(double alpha, double wt1i, double wt1f, double wt2i, double wt2f);
  static FrequencySchedule normal_modes(double alpha, double wt1i, double wt1f, double wt2i,
                                        double wt2f);
  static FrequencySchedule tabulated(std::vector<TabulatedSample> samples);

  // Throws std::invalid_argument with a field-level message on violation.
  void validate() const;
};

// Rotation angle and normal-mode frequency trajectories of the diagonalized
// Hamiltonian. Negative final frequency-squared encodes the inverted
// (imaginary-frequency) regime.
struct NormalModes {
  double alpha = 0.0;
  double mode1_initial_sq = 0.0, mode1_final_sq = 0.0;
  double mode2_initial_sq = 0.0, mode2_final_sq = 0.0;

  // Sampled normal-mode trajectories for tabulated schedules; empty for the
  // piecewise-constant kinds.
  std::vector<double> times;
  std::vector<double> mode1_sq;
  std::vector<double> mode2_sq;

  bool tabulated() const { return !times.empty(); }
};

// alpha = 0.5 atan(2J / (omega1^2 - omega2^2)), in [-pi/4, pi/4].
// Degenerate tie-break: equal frequencies with J != 0 give sign(J) * pi/4;
// J = 0 gives 0.
double rotation_angle(double omega1_sq, double omega2_sq, double coupling);

// Eigenvalues of the potential matrix: (wtilde1^2, wtilde2^2). Continuous in
// J, preserves trace and determinant of the potential block. A negative
// return is valid and flags the inverted regime.
std::pair<double, double> normal_mode_frequencies(double omega1_sq, double omega2_sq,
                                                  double coupling);

// Resolves any schedule to rotation angle + normal-mode endpoint data. For
// the quench kind alpha comes from the post-quench parameters and the mode
// endpoints from the diagonalization applied at each epoch with the same J.
NormalModes build_model(const FrequencySchedule& schedule);

}  // namespace oscent
