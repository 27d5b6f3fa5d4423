// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one [PASS]/[FAIL] line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscent/entanglement.hpp"
#include "oscent/ermakov.hpp"
#include "oscent/excited.hpp"
#include "oscent/gaussian.hpp"
#include "oscent/model.hpp"
#include "oscent/oracle.hpp"
#include "oscent/scenario.hpp"
#include "oscent/wigner.hpp"

using namespace oscent;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

void report(int id, const std::string& name, const Check& c) {
  std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", id, name.c_str());
  for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
  if (!c.ok) ++g_failures;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_algebraic_identities() {
  Check c;
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> wsq(1e-6, 10.0), jf(-1.5, 1.5), w(1e-3, 10.0),
      r(-3.0, 3.0), al(-kPi / 4, kPi / 4);
  for (int k = 0; k < 10000; ++k) {
    // trace / determinant identities of the diagonalization
    const double w1 = wsq(rng), w2 = wsq(rng);
    const double J = jf(rng) * std::sqrt(w1 * w2);
    const auto [m1, m2] = normal_mode_frequencies(w1, w2, J);
    c.expect(std::abs((m1 + m2) - (w1 + w2)) <= 1e-10 * (w1 + w2),
             "trace identity violated at draw " + std::to_string(k));
    c.expect(std::abs(m1 * m2 - (w1 * w2 - J * J)) <= 1e-10 * std::max(1.0, w1 * w2),
             "determinant identity violated at draw " + std::to_string(k));

    // marginal determinant and purity identities
    const double e1 = w(rng), e2 = w(rng), r1 = r(rng), r2 = r(rng), a = al(rng);
    const auto wf = wigner_marginal(e1, e2, r1, r2, a);
    const double lhs = wf.alpha1 * wf.alpha2 - wf.alpha3 * wf.alpha3;
    const double rhs = e1 * e2 / wf.eta_bar;
    c.expect(std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(lhs), std::abs(rhs)),
             "wigner determinant identity violated at draw " + std::to_string(k));
    const auto g = reduced_A(e1, e2, r1, r2, a);
    const double p = purity(g);
    c.expect(std::abs(p * p - rhs) <= 1e-10 * std::max(p * p, rhs),
             "purity identity violated at draw " + std::to_string(k));

    // geometric spectrum partial sum (Kahan-compensated)
    const auto s = spectral(g);
    double sum = 0.0, comp = 0.0;
    for (int n = 0; n <= 500; ++n) {
      const double y = eigenvalue(n, s) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    c.expect(std::abs(sum - (1.0 - std::pow(s.xi, 501))) <= 1e-12,
             "geometric partial sum violated at draw " + std::to_string(k) +
                 " (xi = " + num(s.xi) + ")");
  }
  report(1, "algebraic identities over 10^4 random draws", c);
}

// ---------------------------------------------------------------- criterion 2
void criterion_ermakov() {
  Check c;
  std::vector<double> grid(2001);
  for (int k = 0; k < 2001; ++k) grid[k] = 20.0 * k / 2000;

  struct Case {
    const char* name;
    ModeSchedule closed;
    double (*b)(double, double, double);
    double (*bddot)(double, double, double);
    double wi, wf;
  };
  // model-3 mode-1 endpoints at J = 1.1 are included as the fourth case
  const NormalModes nm3 = build_model(FrequencySchedule::quench(1.0, 1.3, 1.5, 1.8, 1.1));
  const double m3_wi = std::sqrt(nm3.mode1_initial_sq), m3_wf = std::sqrt(nm3.mode1_final_sq);

  const std::vector<Case> cases = {
      {"quench 2 -> 0.5", {4.0, 0.25, {}}, nullptr, nullptr, 2.0, 0.5},
      {"free 1 -> 0", {1.0, 0.0, {}}, nullptr, nullptr, 1.0, 0.0},
      {"inverted 1 -> 0.7i", {1.0, -0.49, {}}, nullptr, nullptr, 1.0, 0.7},
      {"model-3 mode 1", {nm3.mode1_initial_sq, nm3.mode1_final_sq, {}}, nullptr, nullptr,
       m3_wi, m3_wf},
  };

  for (const auto& cs : cases) {
    ModeSchedule numeric = cs.closed;
    const double w0sq = cs.closed.initial_sq, wfsq = cs.closed.final_sq;
    numeric.omega_sq = [wfsq](double) { return wfsq; };
    const auto exact = solve_ermakov(cs.closed, grid);
    const auto num_tr = solve_ermakov(numeric, grid);

    c.expect(num_tr.b[0] == 1.0 && num_tr.bdot[0] == 0.0,
             std::string(cs.name) + ": initial conditions not exact");
    double max_err = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      max_err = std::max(max_err, std::abs(num_tr.b[k] - exact.b[k]));
    c.expect(max_err <= 1e-8,
             std::string(cs.name) + ": |b_numeric - b_closed| = " + num(max_err));

    // Ermakov residual from the closed form's analytic second derivative
    double max_res = 0.0;
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
      const double t = grid[k];
      double b, bdd, wsq_t;
      if (wfsq > 0.0) {
        b = quench_b(cs.wi, cs.wf, t);
        bdd = quench_bddot(cs.wi, cs.wf, t);
        wsq_t = wfsq;
      } else if (wfsq == 0.0) {
        b = free_b(cs.wi, t);
        bdd = free_bddot(cs.wi, t);
        wsq_t = 0.0;
      } else {
        b = inverted_b(cs.wi, cs.wf, t);
        bdd = inverted_bddot(cs.wi, cs.wf, t);
        wsq_t = wfsq;
      }
      max_res = std::max(max_res, std::abs(bdd + wsq_t * b - w0sq / (b * b * b)));
    }
    c.expect(max_res <= 1e-8 * w0sq,
             std::string(cs.name) + ": Ermakov residual = " + num(max_res));
  }
  report(2, "Ermakov solver vs closed forms on [0, 20]", c);
}

// ---------------------------------------------------------------- criterion 3
void criterion_oracle_equivalence() {
  Check c;
  for (double J : {0.6, 0.9, 1.1}) {
    const NormalModes nm = build_model(FrequencySchedule::quench(1.0, 1.3, 1.5, 1.8, J));
    for (double t : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const TwoModeState st = sample_state(nm, t);
      const auto tag = "J=" + num(J) + " t=" + num(t);
      const auto [g1, g2] = default_grids(st);
      const PsiGrid psi = sample_psi(0, 0, st, g1, g2);
      const DiscretizedDensity d = partial_trace(psi, Party::A, g1, g2);

      const auto g = reduced_density(Party::A, st);
      const auto s = spectral(g);
      const double s_grid = grid_entropy(grid_spectrum(d));
      c.expect(std::abs(s_grid - von_neumann_entropy(s)) < 1e-3,
               tag + ": |S_grid - S_von| = " + num(std::abs(s_grid - von_neumann_entropy(s))));

      const auto ev = grid_spectrum(d);
      for (int n = 0; n < 5; ++n)
        c.expect(std::abs(ev[n] - eigenvalue(n, s)) < 1e-4,
                 tag + ": eigenvalue " + std::to_string(n) + " off by " +
                     num(std::abs(ev[n] - eigenvalue(n, s))));

      c.expect(std::abs(grid_purity(d) - purity(g)) < 1e-4,
               tag + ": purity off by " + num(std::abs(grid_purity(d) - purity(g))));

      const auto m = second_moments(wigner_form(st));
      const auto [x2, p2] = grid_moments(psi, g1, g2);
      c.expect(std::abs(x2 - m.x_sq) < 1e-4, tag + ": <x1^2> off by " + num(std::abs(x2 - m.x_sq)));
      c.expect(std::abs(p2 - m.p_sq) < 1e-4, tag + ": <p1^2> off by " + num(std::abs(p2 - m.p_sq)));
    }
  }
  report(3, "grid oracle equivalence on the quench model (J x t matrix)", c);
}

// ---------------------------------------------------------------- criterion 4
void criterion_reference_numbers() {
  Check c;
  // model-2 ordering boundary at the preset parameters; the reference value
  // is the first crossing among the plotted curves (pi/4 vs pi/8)
  const NormalModes nm2 = build_model(preset("fig2").schedule);
  const double t2 = crossing_time(nm2, kPi / 4, kPi / 8, 2.5);
  c.expect(std::abs(t2 - 0.713) <= 0.005, "model-2 boundary " + num(t2) + " not in 0.713 +- 0.005");
  c.note("model-2 boundary (pi/4 vs pi/8, preset parameters): " + num(t2));

  // model-1: the 0.773 reference boundary corresponds to a mode-2 final
  // frequency of 1.0 rather than the preset 0.5; both readings are reported.
  const NormalModes nm1_fig = build_model(FrequencySchedule::toy1(kPi / 4, 1.0, 2.0, 1.0));
  const double t1 = crossing_time(nm1_fig, kPi / 4, kPi / 8, 2.5);
  c.expect(std::abs(t1 - 0.773) <= 0.005, "model-1 boundary " + num(t1) + " not in 0.773 +- 0.005");
  c.note("model-1 boundary (pi/4 vs pi/8, wtilde2_f = 1.0 reading): " + num(t1));
  const NormalModes nm1_cap = build_model(preset("fig1").schedule);
  c.note("model-1 boundary at preset parameters (informational): " +
         num(crossing_time(nm1_cap, kPi / 4, kPi / 8, 2.5)));

  // static pi/4 purity closed form
  for (const auto& [w1, w2] : {std::pair<double, double>{1.0, 4.0}, {0.36, 2.89}, {2.0, 3.0}}) {
    const double p = purity(reduced_A(w1, w2, 0.0, 0.0, kPi / 4));
    const double closed = 2.0 * std::sqrt(w1 * w2) / (w1 + w2);
    c.expect(std::abs(p - closed) <= 1e-12,
             "static purity (" + num(w1) + "," + num(w2) + ") off by " +
                 num(std::abs(p - closed)));
  }

  // S_100 approaches S_infinity = -ln(1 - xi) for xi <= 0.5
  for (double xi = 0.05; xi <= 0.5 + 1e-12; xi += 0.05) {
    SpectralData s{1.0, xi, Party::A};
    const double s100 = renyi_entropy(s, 100);
    const double s_inf = -std::log1p(-xi);
    c.expect(std::abs(s100 - s_inf) <= 1e-2,
             "S_100 vs S_inf at xi = " + num(xi) + ": " + num(std::abs(s100 - s_inf)));
  }
  report(4, "reference-number reproduction (boundaries, static purity, S_100)", c);
}

// ---------------------------------------------------------------- criterion 5
struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

FigureTable read_figure_csv(const std::filesystem::path& p) {
  FigureTable t;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    if (t.columns.empty()) {
      while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void criterion_figure_properties() {
  Check c;
  namespace fs = std::filesystem;

  // pointwise orderings at the preset parameters
  {
    ScenarioConfig base = preset("fig1");
    base.samples = 1001;
    const std::vector<double> alphas = {kPi / 24, kPi / 12, kPi / 4};
    const auto rs = run_sweep(base, "alpha", alphas);
    const auto col = [](const RunResult& r, const char* n) {
      return std::find(r.columns.begin(), r.columns.end(), n) - r.columns.begin();
    };
    const auto cs = col(rs[0], "S_von");
    for (std::size_t k = 0; k < rs[0].rows.size(); ++k) {
      c.expect(rs[0].rows[k][cs] <= rs[1].rows[k][cs] + 1e-12 &&
                   rs[1].rows[k][cs] <= rs[2].rows[k][cs] + 1e-12,
               "fig1a S_von not nondecreasing in |alpha| at row " + std::to_string(k));
    }
    ScenarioConfig base2 = preset("fig2");
    base2.samples = 1001;
    const std::vector<double> alphas2 = {kPi / 24, kPi / 8, kPi / 4};
    const auto rs2 = run_sweep(base2, "alpha", alphas2);
    for (std::size_t k = 0; k < rs2[0].rows.size(); ++k) {
      c.expect(rs2[0].rows[k][cs] <= rs2[1].rows[k][cs] + 1e-12 &&
                   rs2[1].rows[k][cs] <= rs2[2].rows[k][cs] + 1e-12,
               "fig2a S_von not nondecreasing in |alpha| at row " + std::to_string(k));
    }
  }
  {
    // fig3b: Renyi ordering at J = 1.1
    ScenarioConfig cfg = preset("fig3");
    cfg.samples = 1001;
    const RunResult r = run_scenario(cfg);
    const auto col = [&](const char* n) {
      return std::find(r.columns.begin(), r.columns.end(), n) - r.columns.begin();
    };
    const auto c2 = col("S_renyi_2"), c4 = col("S_renyi_4"), c100 = col("S_renyi_100");
    for (const auto& row : r.rows)
      c.expect(row[c2] >= row[c4] - 1e-14 && row[c4] >= row[c100] - 1e-14,
               "fig3b Renyi ordering violated at t = " + num(row[0]));
  }
  {
    // fig4: r(t) < 1, pointwise nonincreasing in J; Gamma/Omega >= 1
    ScenarioConfig cfg = preset("fig4");
    cfg.samples = 1001;
    const std::vector<double> j_values = {0.6, 0.9, 1.1};
    std::vector<RunResult> rs = run_sweep(cfg, "J", j_values);
    const auto col = [&](const char* n) {
      return std::find(rs[0].columns.begin(), rs[0].columns.end(), n) - rs[0].columns.begin();
    };
    const auto cr = col("r"), cg = col("Gamma"), co = col("Omega");
    for (std::size_t k = 0; k < rs[0].rows.size(); ++k) {
      const double t = rs[0].rows[k][0];
      if (t > 0.0)
        for (const auto& r : rs)
          c.expect(r.rows[k][cr] < 1.0, "fig4a r >= 1 at t = " + num(t));
      c.expect(rs[2].rows[k][cr] <= rs[1].rows[k][cr] + 1e-12 &&
                   rs[1].rows[k][cr] <= rs[0].rows[k][cr] + 1e-12,
               "fig4a r not nonincreasing in J at t = " + num(t));
      for (const auto& r : rs)
        c.expect(r.rows[k][cg] / r.rows[k][co] >= 1.0 - 1e-12,
                 "fig4b Gamma/Omega < 1 at t = " + num(t));
    }
  }

  // regression lock: emitted panel data vs the committed baselines
  const fs::path baseline_dir = OSCENT_BASELINE_DIR;
  const fs::path work = fs::temp_directory_path() / "oscent_acceptance_figs";
  fs::remove_all(work);
  for (const char* name : {"fig1", "fig2", "fig3", "fig4"}) {
    const auto written = emit_figure(name, work.string(), 201, 10.0);
    for (const auto& file : written) {
      const fs::path current(file);
      const fs::path baseline = baseline_dir / current.filename();
      if (!fs::exists(baseline)) {
        fs::create_directories(baseline_dir);
        fs::copy_file(current, baseline);
        c.note(std::string("baseline created: ") + baseline.string());
        continue;
      }
      const FigureTable now = read_figure_csv(current);
      const FigureTable ref = read_figure_csv(baseline);
      bool same_shape = now.columns == ref.columns && now.rows.size() == ref.rows.size();
      c.expect(same_shape, current.filename().string() + ": layout differs from baseline");
      if (!same_shape) continue;
      for (std::size_t i = 0; i < now.rows.size() && c.ok; ++i)
        for (std::size_t j = 0; j < now.rows[i].size(); ++j) {
          const double a = now.rows[i][j], b = ref.rows[i][j];
          if (std::abs(a - b) > 1e-9 * std::max({std::abs(a), std::abs(b), 1.0})) {
            c.expect(false, current.filename().string() + ": value drift at row " +
                                std::to_string(i) + " col " + std::to_string(j) + " (" +
                                num(a) + " vs " + num(b) + ")");
            break;
          }
        }
    }
  }
  report(5, "figure-panel properties and regression lock", c);
}

// ---------------------------------------------------------------- criterion 6
void criterion_physical_bounds() {
  Check c;
  struct PresetRun {
    std::string name;
    ScenarioConfig cfg;
  };
  std::vector<PresetRun> runs;
  for (double a : {0.0, kPi / 24, kPi / 12, kPi / 8, kPi / 4}) {
    ScenarioConfig f1 = preset("fig1");
    f1.schedule.alpha = a;
    f1.quantities = {"S_von", "S_renyi:2", "S_renyi:100", "xi", "purity", "Omega", "Omega_tilde",
                     "r", "Gamma"};
    runs.push_back({"fig1 alpha=" + num(a), f1});
    ScenarioConfig f2 = preset("fig2");
    f2.schedule.alpha = a;
    f2.quantities = f1.quantities;
    runs.push_back({"fig2 alpha=" + num(a), f2});
  }
  for (double J : {0.6, 0.9, 1.1}) {
    ScenarioConfig f3 = preset("fig3");
    f3.schedule.coupling = J;
    f3.quantities = {"S_von", "S_renyi:2", "S_renyi:100", "xi", "purity", "Omega", "Omega_tilde",
                     "r", "Gamma"};
    runs.push_back({"fig3 J=" + num(J), f3});
  }

  for (auto& pr : runs) {
    pr.cfg.samples = 1001;
    const RunResult r = run_scenario(pr.cfg);
    const auto col = [&](const char* n) {
      return std::find(r.columns.begin(), r.columns.end(), n) - r.columns.begin();
    };
    const auto cxi = col("xi"), co = col("Omega"), cot = col("Omega_tilde"), cg = col("Gamma"),
               cs = col("S_von"), c2 = col("S_renyi_2"), c100 = col("S_renyi_100"),
               cp = col("purity");
    for (const auto& row : r.rows) {
      const double t = row[0];
      c.expect(row[cxi] >= 0.0 && row[cxi] < 1.0, pr.name + ": xi out of [0,1) at t = " + num(t));
      c.expect(row[co] >= 1.0 - 1e-12, pr.name + ": Omega < 1 at t = " + num(t));
      c.expect(row[cot] >= 1.0 - 1e-12, pr.name + ": Omega_tilde < 1 at t = " + num(t));
      c.expect(row[cg] >= 1.0 - 1e-12, pr.name + ": Gamma < 1 at t = " + num(t));
      c.expect(row[cs] >= 0.0 && row[c2] >= 0.0 && row[c100] >= 0.0,
               pr.name + ": negative entropy at t = " + num(t));
      c.expect(row[cp] > 0.0 && row[cp] <= 1.0 + 1e-15,
               pr.name + ": purity out of (0,1] at t = " + num(t));
      // p_n in (0,1], strictly decreasing for xi > 0
      SpectralData s{1.0, row[cxi], Party::A};
      double prev = eigenvalue(0, s);
      c.expect(prev > 0.0 && prev <= 1.0, pr.name + ": p_0 out of (0,1] at t = " + num(t));
      if (s.xi > 0.0)
        for (int n = 1; n <= 10; ++n) {
          const double cur = eigenvalue(n, s);
          c.expect(cur > 0.0 && cur < prev, pr.name + ": p_n ordering broken at t = " + num(t));
          prev = cur;
        }
    }
  }
  report(6, "physical bounds on every emitted sample of every preset", c);
}

// ---------------------------------------------------------------- criterion 7
void criterion_schmidt_reconstruction() {
  Check c;
  const NormalModes nm = build_model(preset("fig3").schedule);
  for (double t : {0.0, 1.0, 2.0}) {
    const TwoModeState st = sample_state(nm, t);
    const double xi = spectral(reduced_density(Party::A, st)).xi;
    const int terms = std::max(schmidt_truncation(xi, 1e-10), 2);
    const auto m = second_moments(wigner_form(st));
    const double l1 = 4.0 * std::sqrt(m.x_sq);
    double max_err = 0.0;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double x1 = -l1 + 2.0 * l1 * i / 20.0;
        const double x2 = -l1 + 2.0 * l1 * j / 20.0;
        const auto diff =
            schmidt_reconstruct(x1, x2, st, terms) - eval_psi(0, 0, x1, x2, st);
        max_err = std::max(max_err, std::abs(diff));
      }
    c.expect(max_err < 1e-6, "t = " + num(t) + ": max |psi_schmidt - psi_direct| = " +
                                 num(max_err) + " (terms = " + std::to_string(terms) + ")");
  }
  report(7, "Schmidt reconstruction matches the direct wavefunction", c);
}

// ---------------------------------------------------------------- criterion 8
template <class F>
double simpson2d(const F& f, double lx, double lp, int n = 256) {
  const double hx = 2.0 * lx / n, hp = 2.0 * lp / n;
  const auto wgt = [n](int k) { return k == 0 || k == n ? 1.0 : (k % 2 ? 4.0 : 2.0); };
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double row = 0.0;
    for (int j = 0; j <= n; ++j) row += wgt(j) * f(-lx + i * hx, -lp + j * hp);
    acc += wgt(i) * row;
  }
  return acc * hx * hp / 9.0;
}

void criterion_appendix_oracle() {
  Check c;
  const NormalModes nm = build_model(preset("fig4").schedule);
  for (double t : {0.5, 1.0, 2.0}) {
    const TwoModeState st = sample_state(nm, t);
    const auto tag = "t = " + num(t);
    const auto gA = reduced_density(Party::A, st);
    const auto co = excited_coefficients(st);
    const double r = mixedness_ratio(co, gA);

    const auto [g1, g2] = default_grids(st, 0, 1);
    const PsiGrid psi01 = sample_psi(0, 1, st, g1, g2);
    const DiscretizedDensity rho01 = partial_trace(psi01, Party::A, g1, g2);
    c.expect(std::abs(grid_purity(rho01) - purity(gA) * r) < 1e-4,
             tag + ": Tr[rho01^2] vs purity*r off by " +
                 num(std::abs(grid_purity(rho01) - purity(gA) * r)));

    // Gamma against quadrature moments of the marginal W01 form
    const auto w = wigner_form(st);
    const auto m = second_moments(w);
    const double lx = 8.0 * std::sqrt(3.0 * m.x_sq), lp = 8.0 * std::sqrt(3.0 * m.p_sq);
    const auto w01 = [&](double x, double p) {
      return wigner_marginal_value(w, x, p) *
             (co.h0 + co.h1 * x * x + co.h2 * p * p + 2.0 * co.h3 * x * p);
    };
    const double norm01 = simpson2d(w01, lx, lp);
    c.expect(std::abs(norm01 - 1.0) < 1e-6, tag + ": W01 normalization = " + num(norm01));
    const double x2 = simpson2d([&](double x, double p) { return x * x * w01(x, p); }, lx, lp);
    const double p2 = simpson2d([&](double x, double p) { return p * p * w01(x, p); }, lx, lp);
    const double gamma = uncertainty_gamma(co, w);
    c.expect(std::abs(gamma - 4.0 * x2 * p2) < 1e-4,
             tag + ": Gamma vs W01 moments off by " + num(std::abs(gamma - 4.0 * x2 * p2)));

    // and against the sampled-psi moments as a second, independent route
    const auto [gx2, gp2] = grid_moments(psi01, g1, g2);
    c.expect(std::abs(gamma - 4.0 * gx2 * gp2) < 1e-4,
             tag + ": Gamma vs psi01 grid moments off by " +
                 num(std::abs(gamma - 4.0 * gx2 * gp2)));
  }
  report(8, "excited-sector oracle (purity factorization and Gamma)", c);
}

}  // namespace

int main() {
  criterion_algebraic_identities();
  criterion_ermakov();
  criterion_oracle_equivalence();
  criterion_reference_numbers();
  criterion_figure_properties();
  criterion_physical_bounds();
  criterion_schmidt_reconstruction();
  criterion_appendix_oracle();
  if (g_failures == 0) std::printf("all acceptance criteria passed\n");
  else std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
