#include "oscent/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscent {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAlphaRatioTol = 1e-10;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double rotation_angle(double omega1_sq, double omega2_sq, double coupling) {
  if (coupling == 0.0) return 0.0;
  const double diff = omega1_sq - omega2_sq;
  if (diff == 0.0) return std::copysign(kPi / 4.0, coupling);
  return 0.5 * std::atan(2.0 * coupling / diff);
}

std::pair<double, double> normal_mode_frequencies(double omega1_sq, double omega2_sq,
                                                  double coupling) {
  const double diff = omega1_sq - omega2_sq;
  const double sum = omega1_sq + omega2_sq;
  const double sign = diff >= 0.0 ? 1.0 : -1.0;  // sign(0) := +1
  const double root = std::sqrt(diff * diff + 4.0 * coupling * coupling);
  return {0.5 * (sum + sign * root), 0.5 * (sum - sign * root)};
}

FrequencySchedule FrequencySchedule::quench(double w1i, double w1f, double w2i, double w2f,
                                            double J) {
  FrequencySchedule s;
  s.kind = ScheduleKind::Quench;
  s.omega1_i = w1i;
  s.omega1_f = w1f;
  s.omega2_i = w2i;
  s.omega2_f = w2f;
  s.coupling = J;
  return s;
}

FrequencySchedule FrequencySchedule::toy1(double alpha, double wt1i, double wt2i, double wt2f) {
  FrequencySchedule s;
  s.kind = ScheduleKind::Toy1;
  s.alpha = alpha;
  s.wtilde1_i = wt1i;
  s.wtilde1_f = 0.0;
  s.wtilde2_i = wt2i;
  s.wtilde2_f = wt2f;
  return s;
}

FrequencySchedule FrequencySchedule::toy2(double alpha, double wt1i, double wt1f, double wt2i,
                                          double wt2f) {
  FrequencySchedule s;
  s.kind = ScheduleKind::Toy2;
  s.alpha = alpha;
  s.wtilde1_i = wt1i;
  s.wtilde1_f = wt1f;
  s.wtilde2_i = wt2i;
  s.wtilde2_f = wt2f;
  return s;
}

FrequencySchedule FrequencySchedule::normal_modes(double alpha, double wt1i, double wt1f,
                                                  double wt2i, double wt2f) {
  FrequencySchedule s;
  s.kind = ScheduleKind::NormalModes;
  s.alpha = alpha;
  s.wtilde1_i = wt1i;
  s.wtilde1_f = wt1f;
  s.wtilde2_i = wt2i;
  s.wtilde2_f = wt2f;
  return s;
}

FrequencySchedule FrequencySchedule::tabulated(std::vector<TabulatedSample> samples) {
  FrequencySchedule s;
  s.kind = ScheduleKind::Tabulated;
  s.table = std::move(samples);
  return s;
}

void FrequencySchedule::validate() const {
  if (kind == ScheduleKind::Toy1 || kind == ScheduleKind::Toy2 ||
      kind == ScheduleKind::NormalModes)
    require(alpha >= -kPi / 4.0 && alpha <= kPi / 4.0, "alpha: must be in [-pi/4, pi/4]");
  switch (kind) {
    case ScheduleKind::Quench:
      require(omega1_i > 0.0, "omega1_i: must be > 0");
      require(omega2_i > 0.0, "omega2_i: must be > 0");
      require(omega1_f > 0.0, "omega1_f: must be > 0");
      require(omega2_f > 0.0, "omega2_f: must be > 0");
      break;
    case ScheduleKind::Toy1:
      require(wtilde1_i > 0.0, "wtilde1_i: must be > 0");
      require(wtilde2_i > 0.0, "wtilde2_i: must be > 0");
      require(wtilde1_f == 0.0, "wtilde1_f: must be 0 for toy1");
      require(wtilde2_f > 0.0, "wtilde2_f: must be > 0");
      break;
    case ScheduleKind::Toy2:
      require(wtilde1_i > 0.0, "wtilde1_i: must be > 0");
      require(wtilde2_i > 0.0, "wtilde2_i: must be > 0");
      require(wtilde1_f > 0.0, "wtilde1_f: must be > 0 (imaginary magnitude) for toy2");
      require(wtilde2_f > 0.0, "wtilde2_f: must be > 0");
      break;
    case ScheduleKind::NormalModes:
      require(wtilde1_i > 0.0, "wtilde1_i: must be > 0");
      require(wtilde2_i > 0.0, "wtilde2_i: must be > 0");
      require(wtilde1_f >= 0.0, "wtilde1_f: must be >= 0");
      require(wtilde2_f >= 0.0, "wtilde2_f: must be >= 0");
      break;
    case ScheduleKind::Tabulated: {
      require(table.size() >= 2, "table: needs at least 2 samples");
      require(table.front().t == 0.0, "table: first sample must be at t = 0");
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& row = table[k];
        std::ostringstream at;
        at << "table row " << k << " (t = " << row.t << ")";
        require(row.omega1_sq > 0.0 || k > 0, at.str() + ": omega1_sq must be > 0 at t = 0");
        require(row.omega2_sq > 0.0 || k > 0, at.str() + ": omega2_sq must be > 0 at t = 0");
        if (k > 0) require(row.t > table[k - 1].t, at.str() + ": times must strictly increase");
      }
      break;
    }
  }
}

namespace {

NormalModes from_endpoints(double alpha, double wt1i, double wt1f_sq, double wt2i,
                           double wt2f_sq) {
  NormalModes nm;
  nm.alpha = alpha;
  nm.mode1_initial_sq = wt1i * wt1i;
  nm.mode1_final_sq = wt1f_sq;
  nm.mode2_initial_sq = wt2i * wt2i;
  nm.mode2_final_sq = wt2f_sq;
  return nm;
}

NormalModes build_tabulated(const FrequencySchedule& s) {
  // Constant-alpha validity: 2J / (omega1^2 - omega2^2) must agree across
  // samples to relative tolerance 1e-10.
  const auto ratio_of = [](const TabulatedSample& row) {
    return 2.0 * row.coupling / (row.omega1_sq - row.omega2_sq);
  };
  const double diff0 = s.table.front().omega1_sq - s.table.front().omega2_sq;
  const bool degenerate0 = diff0 == 0.0;
  double worst = 0.0;
  std::size_t worst_k = 0;
  const double r0 = degenerate0 ? 0.0 : ratio_of(s.table.front());
  for (std::size_t k = 1; k < s.table.size(); ++k) {
    const auto& row = s.table[k];
    const double diffk = row.omega1_sq - row.omega2_sq;
    double dev;
    if (degenerate0 || diffk == 0.0) {
      dev = (degenerate0 && diffk == 0.0 &&
             std::signbit(row.coupling) == std::signbit(s.table.front().coupling))
                ? 0.0
                : 1.0;
    } else {
      const double rk = ratio_of(row);
      dev = std::abs(rk - r0) / std::max(1.0, std::abs(r0));
    }
    if (dev > worst) {
      worst = dev;
      worst_k = k;
    }
  }
  if (worst > kAlphaRatioTol) {
    std::ostringstream msg;
    msg << "tabulated schedule violates the constant-alpha condition: "
        << "2J/(omega1^2-omega2^2) deviates by relative " << worst << " at sample " << worst_k
        << " (t = " << s.table[worst_k].t << ")";
    throw std::invalid_argument(msg.str());
  }

  NormalModes nm;
  nm.alpha = rotation_angle(s.table.front().omega1_sq, s.table.front().omega2_sq,
                            s.table.front().coupling);
  nm.times.reserve(s.table.size());
  nm.mode1_sq.reserve(s.table.size());
  nm.mode2_sq.reserve(s.table.size());
  for (const auto& row : s.table) {
    const auto [w1sq, w2sq] = normal_mode_frequencies(row.omega1_sq, row.omega2_sq, row.coupling);
    nm.times.push_back(row.t);
    nm.mode1_sq.push_back(w1sq);
    nm.mode2_sq.push_back(w2sq);
  }
  nm.mode1_initial_sq = nm.mode1_sq.front();
  nm.mode2_initial_sq = nm.mode2_sq.front();
  nm.mode1_final_sq = nm.mode1_sq.back();
  nm.mode2_final_sq = nm.mode2_sq.back();
  return nm;
}

}  // namespace

NormalModes build_model(const FrequencySchedule& schedule) {
  schedule.validate();
  switch (schedule.kind) {
    case ScheduleKind::Quench: {
      const double w1i_sq = schedule.omega1_i * schedule.omega1_i;
      const double w2i_sq = schedule.omega2_i * schedule.omega2_i;
      const double w1f_sq = schedule.omega1_f * schedule.omega1_f;
      const double w2f_sq = schedule.omega2_f * schedule.omega2_f;
      const double J = schedule.coupling;
      NormalModes nm;
      nm.alpha = rotation_angle(w1f_sq, w2f_sq, J);  // post-quench parameters fix alpha
      const auto initial = normal_mode_frequencies(w1i_sq, w2i_sq, J);
      const auto final_ = normal_mode_frequencies(w1f_sq, w2f_sq, J);
      nm.mode1_initial_sq = initial.first;
      nm.mode2_initial_sq = initial.second;
      nm.mode1_final_sq = final_.first;
      nm.mode2_final_sq = final_.second;
      if (nm.mode1_initial_sq <= 0.0 || nm.mode2_initial_sq <= 0.0)
        throw std::invalid_argument("J: initial normal-mode frequency squared must be > 0");
      return nm;
    }
    case ScheduleKind::Toy1:
      return from_endpoints(schedule.alpha, schedule.wtilde1_i, 0.0, schedule.wtilde2_i,
                            schedule.wtilde2_f * schedule.wtilde2_f);
    case ScheduleKind::Toy2:
      return from_endpoints(schedule.alpha, schedule.wtilde1_i,
                            -schedule.wtilde1_f * schedule.wtilde1_f, schedule.wtilde2_i,
                            schedule.wtilde2_f * schedule.wtilde2_f);
    case ScheduleKind::NormalModes:
      return from_endpoints(schedule.alpha, schedule.wtilde1_i,
                            schedule.wtilde1_f * schedule.wtilde1_f, schedule.wtilde2_i,
                            schedule.wtilde2_f * schedule.wtilde2_f);
    case ScheduleKind::Tabulated:
      return build_tabulated(schedule);
  }
  throw std::invalid_argument("model: unknown schedule kind");
}

}  // namespace oscent
