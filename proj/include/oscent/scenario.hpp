#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oscent/model.hpp"

namespace oscent {

// Scenario runner: evaluates the analytic pipeline on a time grid and emits
// deterministic CSV/JSON. Quantity names: S_von, S_renyi:<n> (n >= 2), xi,
// purity, Omega, Omega_tilde, r, Gamma, schmidt_angles.

struct ScenarioConfig {
  FrequencySchedule schedule;
  double t_end = 10.0;
  int samples = 1001;
  std::vector<std::string> quantities;
  std::string output_path;  // empty -> stdout
  enum class Format { Csv, Json };
  Format format = Format::Csv;

  void validate() const;  // throws std::invalid_argument with field names
};

ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

struct RunResult {
  std::string config_echo;            // canonical one-line key=value echo
  std::vector<std::string> columns;   // t, quantities..., diagnostics...
  std::vector<std::vector<double>> rows;
};

RunResult run_scenario(const ScenarioConfig& cfg);

// var is one of: J (quench), alpha (toy/normal-mode kinds), renyi_n.
std::vector<RunResult> run_sweep(const ScenarioConfig& base, const std::string& var,
                                 std::span<const double> values);

void write_csv(const RunResult& result, std::ostream& os);
void write_json(const RunResult& result, std::ostream& os);
void write_sweep_csv(std::span<const RunResult> results, const std::string& var,
                     std::span<const double> values, std::ostream& os);
void write_result(const RunResult& result, const ScenarioConfig& cfg);  // to file or stdout

// Built-in demo scenarios with fixed reference parameters.
ScenarioConfig preset(const std::string& name);  // fig1 | fig2 | fig3 | fig4

// Emits the per-panel CSV data files (fig1a.csv, fig1b.csv, ...) for one
// preset into out_dir. Returns the paths written.
std::vector<std::string> emit_figure(const std::string& name, const std::string& out_dir,
                                     int samples = 1001, double t_end = 10.0);

// First time in (0, t_max] where Omega at alpha_hi crosses Omega at alpha_lo,
// refined by bisection to 1e-4. Requires a piecewise-constant model. Returns
// a negative value when no crossing exists in the window.
double crossing_time(const NormalModes& model, double alpha_hi, double alpha_lo, double t_max);

// Oracle-vs-analytic comparison suite.
struct OracleCheckRow {
  std::string preset;
  std::string quantity;
  double analytic = 0.0;
  double oracle = 0.0;
  double delta = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // e.g. "coarse, informational"
};

struct OracleReport {
  std::vector<OracleCheckRow> rows;
  bool all_pass() const;
};

// presets: subset of {fig1, fig2, fig3, fig4}. xi_corruption is a test hook
// that perturbs the analytic xi fed to the entropy comparisons.
OracleReport run_oracle_suite(std::span<const std::string> presets, int grid_points = 257,
                              double xi_corruption = 0.0);

void write_oracle_csv(const OracleReport& report, std::ostream& os);

}  // namespace oscent
