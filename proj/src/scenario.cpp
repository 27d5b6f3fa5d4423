#include "oscent/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oscent/entanglement.hpp"
#include "oscent/ermakov.hpp"
#include "oscent/excited.hpp"
#include "oscent/gaussian.hpp"
#include "oscent/oracle.hpp"
#include "oscent/version.hpp"
#include "oscent/wigner.hpp"

namespace oscent {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": not a number: '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": not an integer: '" + value + "'");
  }
}

int renyi_order_of(const std::string& quantity) {
  // "S_renyi:<n>"
  const auto pos = quantity.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("quantities: S_renyi needs an order, e.g. S_renyi:2");
  const int n = parse_int("quantities: S_renyi order", trim(quantity.substr(pos + 1)));
  if (n < 2) throw std::invalid_argument("quantities: Renyi order must be >= 2");
  return n;
}

bool known_quantity(const std::string& q) {
  static const char* names[] = {"S_von", "xi",    "purity", "Omega",
                                "Omega_tilde", "r", "Gamma",  "schmidt_angles"};
  for (const char* n : names)
    if (q == n) return true;
  return q.rfind("S_renyi:", 0) == 0;
}

std::vector<TabulatedSample> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table: cannot open '" + path + "'");
  std::vector<TabulatedSample> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() != 4)
      throw std::invalid_argument("table: expected 4 columns t,omega1_sq,omega2_sq,J");
    TabulatedSample s;
    s.t = parse_double("table t", cells[0]);
    s.omega1_sq = parse_double("table omega1_sq", cells[1]);
    s.omega2_sq = parse_double("table omega2_sq", cells[2]);
    s.coupling = parse_double("table J", cells[3]);
    rows.push_back(s);
  }
  return rows;
}

}  // namespace

void ScenarioConfig::validate() const {
  schedule.validate();
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end: must be > 0");
  if (samples < 2) throw std::invalid_argument("samples: must be >= 2");
  if (quantities.empty()) throw std::invalid_argument("quantities: must not be empty");
  for (const auto& q : quantities) {
    if (!known_quantity(q)) throw std::invalid_argument("quantities: unknown quantity '" + q + "'");
    if (q.rfind("S_renyi:", 0) == 0) renyi_order_of(q);
  }
}

ScenarioConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  ScenarioConfig cfg;
  const auto has = [&](const char* k) { return kv.count(k) > 0; };
  const auto need = [&](const char* k) -> std::string {
    if (!has(k)) throw std::invalid_argument(std::string(k) + ": missing required key");
    return kv[k];
  };
  const auto get_d = [&](const char* k) { return parse_double(k, need(k)); };
  const auto opt_d = [&](const char* k, double dflt) {
    return has(k) ? parse_double(k, kv[k]) : dflt;
  };

  const std::string model = need("model");
  if (model == "quench") {
    cfg.schedule = FrequencySchedule::quench(get_d("omega1_i"), get_d("omega1_f"),
                                             get_d("omega2_i"), get_d("omega2_f"), get_d("J"));
  } else if (model == "toy1") {
    cfg.schedule = FrequencySchedule::toy1(get_d("alpha"), get_d("wtilde1_i"),
                                           get_d("wtilde2_i"), get_d("wtilde2_f"));
    if (opt_d("wtilde1_f", 0.0) != 0.0)
      throw std::invalid_argument("wtilde1_f: must be 0 for toy1");
  } else if (model == "toy2") {
    cfg.schedule = FrequencySchedule::toy2(get_d("alpha"), get_d("wtilde1_i"), get_d("wtilde1_f"),
                                           get_d("wtilde2_i"), get_d("wtilde2_f"));
  } else if (model == "normal_modes") {
    cfg.schedule = FrequencySchedule::normal_modes(get_d("alpha"), get_d("wtilde1_i"),
                                                   get_d("wtilde1_f"), get_d("wtilde2_i"),
                                                   get_d("wtilde2_f"));
  } else if (model == "tabulated") {
    cfg.schedule = FrequencySchedule::tabulated(load_table(need("table")));
  } else {
    throw std::invalid_argument("model: unknown kind '" + model + "'");
  }

  cfg.t_end = opt_d("t_end", 10.0);
  cfg.samples = has("samples") ? parse_int("samples", kv["samples"]) : 1001;
  if (has("quantities")) {
    cfg.quantities = split(kv["quantities"], ',');
    cfg.quantities.erase(std::remove(cfg.quantities.begin(), cfg.quantities.end(), ""),
                         cfg.quantities.end());
  } else {
    cfg.quantities = {"S_von"};
  }
  if (has("out")) cfg.output_path = kv["out"];
  if (has("format")) {
    if (kv["format"] == "csv") cfg.format = ScenarioConfig::Format::Csv;
    else if (kv["format"] == "json") cfg.format = ScenarioConfig::Format::Json;
    else throw std::invalid_argument("format: must be csv or json");
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

std::string schedule_echo(const FrequencySchedule& s) {
  std::ostringstream os;
  switch (s.kind) {
    case ScheduleKind::Quench:
      os << "model=quench omega1_i=" << fmt17(s.omega1_i) << " omega1_f=" << fmt17(s.omega1_f)
         << " omega2_i=" << fmt17(s.omega2_i) << " omega2_f=" << fmt17(s.omega2_f)
         << " J=" << fmt17(s.coupling);
      break;
    case ScheduleKind::Toy1:
      os << "model=toy1 alpha=" << fmt17(s.alpha) << " wtilde1_i=" << fmt17(s.wtilde1_i)
         << " wtilde2_i=" << fmt17(s.wtilde2_i) << " wtilde2_f=" << fmt17(s.wtilde2_f);
      break;
    case ScheduleKind::Toy2:
      os << "model=toy2 alpha=" << fmt17(s.alpha) << " wtilde1_i=" << fmt17(s.wtilde1_i)
         << " wtilde1_f=" << fmt17(s.wtilde1_f) << " wtilde2_i=" << fmt17(s.wtilde2_i)
         << " wtilde2_f=" << fmt17(s.wtilde2_f);
      break;
    case ScheduleKind::NormalModes:
      os << "model=normal_modes alpha=" << fmt17(s.alpha) << " wtilde1_i=" << fmt17(s.wtilde1_i)
         << " wtilde1_f=" << fmt17(s.wtilde1_f) << " wtilde2_i=" << fmt17(s.wtilde2_i)
         << " wtilde2_f=" << fmt17(s.wtilde2_f);
      break;
    case ScheduleKind::Tabulated:
      os << "model=tabulated samples_in_table=" << s.table.size();
      break;
  }
  return os.str();
}

std::string config_echo(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << schedule_echo(cfg.schedule) << " t_end=" << fmt17(cfg.t_end)
     << " samples=" << cfg.samples << " quantities=";
  for (std::size_t i = 0; i < cfg.quantities.size(); ++i)
    os << (i ? "," : "") << cfg.quantities[i];
  return os.str();
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const NormalModes nm = build_model(cfg.schedule);

  std::vector<double> grid(cfg.samples);
  for (int k = 0; k < cfg.samples; ++k) grid[k] = cfg.t_end * k / (cfg.samples - 1);
  const ErmakovTrajectory tr1 = solve_ermakov(mode_schedule(nm, 1), grid, 1);
  const ErmakovTrajectory tr2 = solve_ermakov(mode_schedule(nm, 2), grid, 2);

  RunResult out;
  out.config_echo = config_echo(cfg);
  out.columns = {"t"};
  for (const auto& q : cfg.quantities) {
    if (q == "schmidt_angles") {
      out.columns.push_back("theta");
      out.columns.push_back("phi");
    } else if (q.rfind("S_renyi:", 0) == 0) {
      out.columns.push_back("S_renyi_" + std::to_string(renyi_order_of(q)));
    } else {
      out.columns.push_back(q);
    }
  }
  const char* diag[] = {"b1", "b1_dot", "tau1", "omega1_eff",
                        "b2", "b2_dot", "tau2", "omega2_eff"};
  out.columns.insert(out.columns.end(), std::begin(diag), std::end(diag));

  out.rows.reserve(cfg.samples);
  for (int k = 0; k < cfg.samples; ++k) {
    const TwoModeState st = state_at(tr1, tr2, nm.alpha, k);
    const ReducedGaussian gA = reduced_density(Party::A, st);
    const SpectralData sp = spectral(gA);

    std::vector<double> row;
    row.reserve(out.columns.size());
    row.push_back(grid[k]);
    for (const auto& q : cfg.quantities) {
      if (q == "S_von") {
        row.push_back(von_neumann_entropy(sp));
      } else if (q.rfind("S_renyi:", 0) == 0) {
        row.push_back(renyi_entropy(sp, renyi_order_of(q)));
      } else if (q == "xi") {
        row.push_back(sp.xi);
      } else if (q == "purity") {
        row.push_back(purity(gA));
      } else if (q == "Omega") {
        row.push_back(uncertainty_omega(st).first);
      } else if (q == "Omega_tilde") {
        row.push_back(uncertainty_omega(st).second);
      } else if (q == "r") {
        row.push_back(mixedness_ratio(excited_coefficients(st), gA));
      } else if (q == "Gamma") {
        row.push_back(uncertainty_gamma(excited_coefficients(st), wigner_form(st)));
      } else if (q == "schmidt_angles") {
        const SchmidtData sd = schmidt_data(st);
        row.push_back(sd.theta);
        row.push_back(sd.phi);
      }
    }
    row.push_back(tr1.b[k]);
    row.push_back(tr1.bdot[k]);
    row.push_back(tr1.tau[k]);
    row.push_back(tr1.omega_eff[k]);
    row.push_back(tr2.b[k]);
    row.push_back(tr2.bdot[k]);
    row.push_back(tr2.tau[k]);
    row.push_back(tr2.omega_eff[k]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<RunResult> run_sweep(const ScenarioConfig& base, const std::string& var,
                                 std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("sweep: needs at least one value");
  std::vector<RunResult> out;
  out.reserve(values.size());
  for (double v : values) {
    ScenarioConfig cfg = base;
    if (var == "J") {
      if (cfg.schedule.kind != ScheduleKind::Quench)
        throw std::invalid_argument("sweep: J sweep needs a quench model");
      cfg.schedule.coupling = v;
    } else if (var == "alpha") {
      if (cfg.schedule.kind == ScheduleKind::Quench || cfg.schedule.kind == ScheduleKind::Tabulated)
        throw std::invalid_argument("sweep: alpha sweep needs a toy or normal_modes model");
      cfg.schedule.alpha = v;
    } else if (var == "renyi_n") {
      const int n = static_cast<int>(v);
      if (n < 2 || n != v)
        throw std::invalid_argument("sweep: renyi_n values must be integers >= 2");
      std::vector<std::string> qs;
      for (const auto& q : cfg.quantities)
        if (q.rfind("S_renyi:", 0) != 0) qs.push_back(q);
      qs.push_back("S_renyi:" + std::to_string(n));
      cfg.quantities = std::move(qs);
    } else {
      throw std::invalid_argument("sweep: variable must be J, alpha or renyi_n");
    }
    out.push_back(run_scenario(cfg));
  }
  return out;
}

namespace {

void write_metadata(const RunResult& r, std::ostream& os) {
  os << "# oscent " << kVersion << "\n";
  os << "# config: " << r.config_echo << "\n";
  os << "# tolerances: ode_abs=1e-10 ode_rel=1e-10 tau_step_fraction=1e-3\n";
}

void write_header_and_rows(const RunResult& r, std::ostream& os,
                           const std::string& prefix_col = "", const std::string& prefix_val = "") {
  if (!prefix_col.empty()) os << prefix_col << ",";
  for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << r.columns[c];
  os << "\n";
  for (const auto& row : r.rows) {
    if (!prefix_val.empty()) os << prefix_val << ",";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << fmt17(row[c]);
    os << "\n";
  }
}

}  // namespace

void write_csv(const RunResult& result, std::ostream& os) {
  write_metadata(result, os);
  write_header_and_rows(result, os);
}

void write_json(const RunResult& result, std::ostream& os) {
  nlohmann::json j;
  j["metadata"]["version"] = kVersion;
  j["metadata"]["config"] = result.config_echo;
  j["metadata"]["tolerances"] = {
      {"ode_abs", 1e-10}, {"ode_rel", 1e-10}, {"tau_step_fraction", 1e-3}};
  j["columns"] = result.columns;
  j["rows"] = result.rows;
  os << j.dump(2) << "\n";
}

void write_sweep_csv(std::span<const RunResult> results, const std::string& var,
                     std::span<const double> values, std::ostream& os) {
  if (results.empty()) return;
  write_metadata(results.front(), os);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i == 0) {
      write_header_and_rows(results[i], os, var, fmt17(values[i]));
    } else {
      for (const auto& row : results[i].rows) {
        os << fmt17(values[i]);
        for (double v : row) os << "," << fmt17(v);
        os << "\n";
      }
    }
  }
}

void write_result(const RunResult& result, const ScenarioConfig& cfg) {
  const auto emit = [&](std::ostream& os) {
    if (cfg.format == ScenarioConfig::Format::Csv) write_csv(result, os);
    else write_json(result, os);
  };
  if (cfg.output_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("out: cannot write '" + cfg.output_path + "'");
    emit(out);
  }
}

ScenarioConfig preset(const std::string& name) {
  ScenarioConfig cfg;
  cfg.t_end = 10.0;
  cfg.samples = 1001;
  if (name == "fig1") {
    cfg.schedule = FrequencySchedule::toy1(kPi / 4.0, 1.0, 2.0, 0.5);
    cfg.quantities = {"S_von", "xi", "purity", "Omega", "Omega_tilde"};
  } else if (name == "fig2") {
    cfg.schedule = FrequencySchedule::toy2(kPi / 4.0, 1.0, 0.7, 2.0, 0.5);
    cfg.quantities = {"S_von", "xi", "purity", "Omega", "Omega_tilde"};
  } else if (name == "fig3") {
    cfg.schedule = FrequencySchedule::quench(1.0, 1.3, 1.5, 1.8, 1.1);
    cfg.quantities = {"S_von", "S_renyi:2", "S_renyi:4", "S_renyi:100",
                      "xi",    "purity",    "Omega",     "Omega_tilde"};
  } else if (name == "fig4") {
    cfg.schedule = FrequencySchedule::quench(1.0, 1.3, 1.5, 1.8, 1.1);
    cfg.quantities = {"r", "Gamma", "Omega", "xi"};
  } else {
    throw std::invalid_argument("preset: unknown name '" + name + "' (fig1..fig4)");
  }
  return cfg;
}

namespace {

struct Curve {
  std::string label;
  ScenarioConfig cfg;
  std::string column;  // which result column feeds the output
  std::string ratio_over;  // optional second column; output = column / ratio_over
};

void emit_curves(const std::string& path, const std::vector<Curve>& curves, int samples,
                 double t_end) {
  std::vector<RunResult> results;
  results.reserve(curves.size());
  for (const auto& c : curves) {
    ScenarioConfig cfg = c.cfg;
    cfg.samples = samples;
    cfg.t_end = t_end;
    results.push_back(run_scenario(cfg));
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("figure: cannot write '" + path + "'");
  os << "# oscent " << kVersion << "\n";
  for (std::size_t i = 0; i < curves.size(); ++i)
    os << "# curve " << curves[i].label << ": " << results[i].config_echo << "\n";
  os << "t";
  for (const auto& c : curves) os << "," << c.label;
  os << "\n";
  const auto col_index = [](const RunResult& r, const std::string& name) {
    const auto it = std::find(r.columns.begin(), r.columns.end(), name);
    if (it == r.columns.end()) throw std::logic_error("figure: missing column " + name);
    return static_cast<std::size_t>(it - r.columns.begin());
  };
  const std::size_t n_rows = results.front().rows.size();
  for (std::size_t k = 0; k < n_rows; ++k) {
    os << fmt17(results.front().rows[k][0]);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const auto& r = results[i];
      double v = r.rows[k][col_index(r, curves[i].column)];
      if (!curves[i].ratio_over.empty()) v /= r.rows[k][col_index(r, curves[i].ratio_over)];
      os << "," << fmt17(v);
    }
    os << "\n";
  }
}

ScenarioConfig with_alpha(ScenarioConfig cfg, double alpha) {
  cfg.schedule.alpha = alpha;
  return cfg;
}

ScenarioConfig with_coupling(ScenarioConfig cfg, double J) {
  cfg.schedule.coupling = J;
  return cfg;
}

}  // namespace

std::vector<std::string> emit_figure(const std::string& name, const std::string& out_dir,
                                     int samples, double t_end) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto path = [&](const std::string& file) { return (fs::path(out_dir) / file).string(); };
  std::vector<std::string> written;

  if (name == "fig1" || name == "fig2") {
    const ScenarioConfig base = preset(name);
    const std::vector<std::pair<std::string, double>> alphas_a =
        name == "fig1" ? std::vector<std::pair<std::string, double>>{{"alpha=pi/4", kPi / 4},
                                                                     {"alpha=pi/12", kPi / 12},
                                                                     {"alpha=pi/24", kPi / 24}}
                       : std::vector<std::pair<std::string, double>>{{"alpha=pi/4", kPi / 4},
                                                                     {"alpha=pi/8", kPi / 8},
                                                                     {"alpha=pi/24", kPi / 24}};
    std::vector<Curve> a_curves, b_curves;
    for (const auto& [label, alpha] : alphas_a)
      a_curves.push_back({"S_von[" + label + "]", with_alpha(base, alpha), "S_von", ""});
    for (const auto& [label, alpha] :
         std::vector<std::pair<std::string, double>>{{"alpha=pi/4", kPi / 4},
                                                     {"alpha=pi/8", kPi / 8},
                                                     {"alpha=0", 0.0}})
      b_curves.push_back({"Omega[" + label + "]", with_alpha(base, alpha), "Omega", ""});
    emit_curves(path(name + "a.csv"), a_curves, samples, t_end);
    emit_curves(path(name + "b.csv"), b_curves, samples, t_end);
    written = {path(name + "a.csv"), path(name + "b.csv")};
  } else if (name == "fig3") {
    const ScenarioConfig base = preset(name);
    std::vector<Curve> a, b, c;
    for (double J : {1.1, 0.9, 0.6}) {
      a.push_back({"S_von[J=" + fmt_label(J) + "]", with_coupling(base, J), "S_von", ""});
      c.push_back({"Omega[J=" + fmt_label(J) + "]", with_coupling(base, J), "Omega", ""});
    }
    for (int n : {2, 4, 100})
      b.push_back({"S_renyi_" + std::to_string(n) + "[J=1.1]", base,
                   "S_renyi_" + std::to_string(n), ""});
    emit_curves(path("fig3a.csv"), a, samples, t_end);
    emit_curves(path("fig3b.csv"), b, samples, t_end);
    emit_curves(path("fig3c.csv"), c, samples, t_end);
    written = {path("fig3a.csv"), path("fig3b.csv"), path("fig3c.csv")};
  } else if (name == "fig4") {
    const ScenarioConfig base = preset(name);
    std::vector<Curve> a, b;
    for (double J : {1.1, 0.9, 0.6}) {
      a.push_back({"r[J=" + fmt_label(J) + "]", with_coupling(base, J), "r", ""});
      b.push_back({"Gamma_over_Omega[J=" + fmt_label(J) + "]", with_coupling(base, J), "Gamma",
                   "Omega"});
    }
    emit_curves(path("fig4a.csv"), a, samples, t_end);
    emit_curves(path("fig4b.csv"), b, samples, t_end);
    written = {path("fig4a.csv"), path("fig4b.csv")};
  } else {
    throw std::invalid_argument("figure: unknown name '" + name + "' (fig1..fig4)");
  }
  return written;
}

double crossing_time(const NormalModes& model, double alpha_hi, double alpha_lo, double t_max) {
  if (model.tabulated())
    throw std::invalid_argument("crossing_time: needs a piecewise-constant model");
  const auto diff = [&](double t) {
    const TwoModeState st = sample_state(model, t);
    const double o_hi = uncertainty_omega(st.mode1.omega_eff, st.mode2.omega_eff,
                                          st.mode1.log_deriv, st.mode2.log_deriv, alpha_hi)
                            .first;
    const double o_lo = uncertainty_omega(st.mode1.omega_eff, st.mode2.omega_eff,
                                          st.mode1.log_deriv, st.mode2.log_deriv, alpha_lo)
                            .first;
    return o_hi - o_lo;
  };
  const int n_scan = 4001;
  double prev_t = t_max / n_scan;
  double prev_v = diff(prev_t);
  for (int k = 2; k <= n_scan; ++k) {
    const double t = t_max * k / n_scan;
    const double v = diff(t);
    if ((prev_v <= 0.0) != (v <= 0.0)) {
      double lo = prev_t, hi = t;
      while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        if ((diff(mid) <= 0.0) == (prev_v <= 0.0)) lo = mid;
        else hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_t = t;
    prev_v = v;
  }
  return -1.0;
}

namespace {

void push_row(OracleReport& rep, const std::string& preset_name, const std::string& quantity,
              double analytic, double oracle, double tol, const std::string& note) {
  OracleCheckRow row;
  row.preset = preset_name;
  row.quantity = quantity;
  row.analytic = analytic;
  row.oracle = oracle;
  row.delta = std::abs(analytic - oracle);
  row.tolerance = tol;
  row.pass = row.delta <= tol;
  row.note = note;
  rep.rows.push_back(row);
}

std::string at_time(const std::string& what, double t) {
  std::ostringstream os;
  os << what << "@t=" << t;
  return os.str();
}

}  // namespace

bool OracleReport::all_pass() const {
  for (const auto& row : rows)
    if (row.note.empty() && !row.pass) return false;
  return true;
}

OracleReport run_oracle_suite(std::span<const std::string> presets, int grid_points,
                              double xi_corruption) {
  OracleReport rep;
  const std::string note = grid_points < 257 ? "coarse, informational" : "";
  for (const auto& name : presets) {
    const ScenarioConfig cfg = preset(name);
    const NormalModes nm = build_model(cfg.schedule);
    const bool excited_preset = name == "fig4";
    const std::vector<double> times =
        name == "fig2" ? std::vector<double>{0.0, 0.5, 1.0, 2.0}
                       : std::vector<double>{0.0, 0.5, 1.0, 2.0, 5.0};

    for (double t : times) {
      const TwoModeState st = sample_state(nm, t);
      const ReducedGaussian gA = reduced_density(Party::A, st);
      SpectralData sp = spectral(gA);
      sp.xi = std::clamp(sp.xi + xi_corruption, 0.0, 1.0 - 1e-12);

      const auto [g1, g2] = default_grids(st, 0, 0, grid_points);
      const PsiGrid psi = sample_psi(0, 0, st, g1, g2);
      const DiscretizedDensity rho = partial_trace(psi, Party::A, g1, g2);

      push_row(rep, name, at_time("trace", t), 1.0, grid_trace(rho), 1e-6, note);
      const auto ev = grid_spectrum(rho);
      push_row(rep, name, at_time("S_von", t), von_neumann_entropy(sp), grid_entropy(ev), 1e-3,
               note);
      for (int n = 0; n < 5; ++n)
        push_row(rep, name, at_time("p_" + std::to_string(n), t), eigenvalue(n, sp), ev[n], 1e-4,
                 note);
      push_row(rep, name, at_time("purity", t), purity(gA), grid_purity(rho), 1e-4, note);
      const WignerForm w = wigner_form(st);
      const SecondMoments m = second_moments(w);
      const auto [x_sq, p_sq] = grid_moments(psi, g1, g2);
      push_row(rep, name, at_time("x1_sq", t), m.x_sq, x_sq, 1e-4, note);
      push_row(rep, name, at_time("p1_sq", t), m.p_sq, p_sq, 1e-4, note);

      if (excited_preset && t > 0.0 && t <= 2.0) {
        const auto [e1, e2] = default_grids(st, 0, 1, grid_points);
        const PsiGrid psi01 = sample_psi(0, 1, st, e1, e2);
        const DiscretizedDensity rho01 = partial_trace(psi01, Party::A, e1, e2);
        const ExcitedCoefficients co = excited_coefficients(st);
        push_row(rep, name, at_time("trace01", t), 1.0, grid_trace(rho01), 1e-6, note);
        push_row(rep, name, at_time("purity01", t), purity(gA) * mixedness_ratio(co, gA),
                 grid_purity(rho01), 1e-4, note);
        const auto [x01, p01] = grid_moments(psi01, e1, e2);
        push_row(rep, name, at_time("Gamma", t), uncertainty_gamma(co, w), 4.0 * x01 * p01, 1e-4,
                 note);
      }
    }
  }
  return rep;
}

void write_oracle_csv(const OracleReport& report, std::ostream& os) {
  os << "quantity,analytic,oracle,abs_delta,tolerance,verdict\n";
  for (const auto& row : report.rows) {
    os << row.preset << ":" << row.quantity << "," << fmt17(row.analytic) << ","
       << fmt17(row.oracle) << "," << fmt17(row.delta) << "," << fmt17(row.tolerance) << ","
       << (row.pass ? "pass" : "FAIL");
    if (!row.note.empty()) os << " (" << row.note << ")";
    os << "\n";
  }
}

}  // namespace oscent
