#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oscent/ermakov.hpp"
#include "oscent/scenario.hpp"
#include "oscent/version.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericError = 3;
constexpr int kExitOracleFailure = 4;

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("--values: empty list");
  return out;
}

void apply_overrides(oscent::ScenarioConfig& cfg, const std::string& out, const std::string& fmt,
                     int samples, double t_end) {
  if (!out.empty()) cfg.output_path = out;
  if (!fmt.empty()) {
    if (fmt == "csv") cfg.format = oscent::ScenarioConfig::Format::Csv;
    else if (fmt == "json") cfg.format = oscent::ScenarioConfig::Format::Json;
    else throw std::invalid_argument("--format: must be csv or json");
  }
  if (samples > 0) cfg.samples = samples;
  if (t_end > 0.0) cfg.t_end = t_end;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscent: exact entanglement and uncertainty dynamics of two coupled oscillators"};
  app.set_version_flag("--version", oscent::kVersion);
  app.require_subcommand(1);

  std::string config_path, out_path, format, var, values_csv, preset_name = "all",
                                                              figure_name;
  int samples = 0, grid_points = 257;
  double t_end = 0.0;

  auto* simulate = app.add_subcommand("simulate", "run one scenario from a config file");
  simulate->add_option("config", config_path, "key = value config file")->required();
  simulate->add_option("--out", out_path, "output path (default stdout)");
  simulate->add_option("--format", format, "csv | json");
  simulate->add_option("--samples", samples, "override sample count");
  simulate->add_option("--t-end", t_end, "override end time");

  auto* sweep = app.add_subcommand("sweep", "run a scenario for several parameter values");
  sweep->add_option("config", config_path)->required();
  sweep->add_option("--var", var, "J | alpha | renyi_n")->required();
  sweep->add_option("--values", values_csv, "comma-separated values")->required();
  sweep->add_option("--out", out_path);
  sweep->add_option("--samples", samples);
  sweep->add_option("--t-end", t_end);

  auto* oracle = app.add_subcommand("oracle-check", "compare closed forms with the grid oracle");
  oracle->add_option("--preset", preset_name, "all | fig1 | fig2 | fig3 | fig4");
  oracle->add_option("--grid", grid_points, "grid points per axis (odd, >= 65)");
  oracle->add_option("--out", out_path);

  auto* figure = app.add_subcommand("figure", "emit the built-in scenario data files");
  figure->add_option("name", figure_name, "fig1 | fig2 | fig3 | fig4")->required();
  figure->add_option("--out", out_path, "output directory (default .)");
  figure->add_option("--samples", samples);
  figure->add_option("--t-end", t_end);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      oscent::ScenarioConfig cfg = oscent::parse_config_file(config_path);
      apply_overrides(cfg, out_path, format, samples, t_end);
      const oscent::RunResult result = oscent::run_scenario(cfg);
      oscent::write_result(result, cfg);
      return 0;
    }
    if (*sweep) {
      oscent::ScenarioConfig cfg = oscent::parse_config_file(config_path);
      apply_overrides(cfg, out_path, format, samples, t_end);
      const std::vector<double> values = parse_values(values_csv);
      const auto results = oscent::run_sweep(cfg, var, values);
      if (cfg.output_path.empty()) {
        oscent::write_sweep_csv(results, var, values, std::cout);
      } else {
        std::ofstream os(cfg.output_path, std::ios::binary);
        if (!os) throw std::invalid_argument("--out: cannot write " + cfg.output_path);
        oscent::write_sweep_csv(results, var, values, os);
      }
      return 0;
    }
    if (*oracle) {
      std::vector<std::string> presets;
      if (preset_name == "all") presets = {"fig1", "fig2", "fig3", "fig4"};
      else presets = {preset_name};
      const oscent::OracleReport report = oscent::run_oracle_suite(presets, grid_points);
      if (out_path.empty()) {
        oscent::write_oracle_csv(report, std::cout);
      } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::invalid_argument("--out: cannot write " + out_path);
        oscent::write_oracle_csv(report, os);
      }
      return report.all_pass() ? 0 : kExitOracleFailure;
    }
    if (*figure) {
      const std::string dir = out_path.empty() ? "." : out_path;
      const int n = samples > 0 ? samples : 1001;
      const double te = t_end > 0.0 ? t_end : 10.0;
      const auto written = oscent::emit_figure(figure_name, dir, n, te);
      for (const auto& p : written) std::cerr << "wrote " << p << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const oscent::SolverError& e) {
    std::cerr << "numeric error: " << e.what() << " (last good time " << e.last_time << ")\n";
    return kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumericError;
  }
  return 0;
}
