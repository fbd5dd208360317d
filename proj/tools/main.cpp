// Command-line front end: emits the figure data sets and quoted scalars as
// CSV/JSON artifacts.  Every run writes a manifest with the parameters and
// all computed scalars; CSV bytes are stable across runs at a fixed
// configuration and thread count.
//
// Exit codes: 0 ok, 2 invalid parameters, 3 oracle mismatch, 4 optimizer
// non-convergence (partial output retained).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermcat/bell.hpp"
#include "thermcat/channels.hpp"
#include "thermcat/csv.hpp"
#include "thermcat/moments.hpp"
#include "thermcat/observables.hpp"
#include "thermcat/oracle_check.hpp"
#include "thermcat/reference.hpp"
#include "thermcat/states.hpp"

using namespace thermcat;
using json = nlohmann::json;

namespace {

constexpr int kExitBadParams = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitNotConverged = 4;

struct CommonOpts {
  double variance = 100.0;
  double displacement = 1.0;
  double phi = kPi;
  int sign = -1;
  double transmittance = 0.5;
  double gamma_t = 0.0;
  double grid_min = -1.0;
  double grid_max = 1.0;
  int grid_steps = 201;
  std::string out_dir = "out";
  int threads = 1;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "key=value configuration file");
  cmd->add_option("--variance,-V", o.variance, "phase-space variance V >= 1");
  cmd->add_option("--displacement,-d", o.displacement, "displacement d");
  cmd->add_option("--phi", o.phi, "interaction phase phi = lambda t");
  cmd->add_option("--sign", o.sign, "measurement branch, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  cmd->add_option("--transmittance", o.transmittance, "beam splitter T");
  cmd->add_option("--gamma-t", o.gamma_t, "loss gamma*t");
  cmd->add_option("--grid-min", o.grid_min, "grid lower bound");
  cmd->add_option("--grid-max", o.grid_max, "grid upper bound");
  cmd->add_option("--grid-steps", o.grid_steps, "grid sample count");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--threads", o.threads, "parallel optimizer restarts");
}

// key=value per line; command-line flags take precedence.
void apply_config(CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw BadParameterError("cannot read config file " + o.config_path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw BadParameterError("config line is not key=value: " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    auto set_double = [&](const char* flag, double& field) {
      if (cmd->count(flag) == 0) field = std::stod(value);
    };
    auto set_int = [&](const char* flag, int& field) {
      if (cmd->count(flag) == 0) field = std::stoi(value);
    };
    if (key == "variance") set_double("--variance", o.variance);
    else if (key == "displacement") set_double("--displacement", o.displacement);
    else if (key == "phi") set_double("--phi", o.phi);
    else if (key == "sign") set_int("--sign", o.sign);
    else if (key == "transmittance") set_double("--transmittance", o.transmittance);
    else if (key == "gamma-t") set_double("--gamma-t", o.gamma_t);
    else if (key == "grid-min") set_double("--grid-min", o.grid_min);
    else if (key == "grid-max") set_double("--grid-max", o.grid_max);
    else if (key == "grid-steps") set_int("--grid-steps", o.grid_steps);
    else if (key == "out") {
      if (cmd->count("--out") == 0) o.out_dir = value;
    } else if (key == "threads") set_int("--threads", o.threads);
    else throw BadParameterError("unknown config key: " + key);
  }
}

void validate(const CommonOpts& o) {
  if (o.variance < 1.0) throw BadVarianceError("need V >= 1");
  if (o.transmittance < 0.0 || o.transmittance > 1.0)
    throw BadTransmittanceError("need transmittance in [0,1]");
  if (o.gamma_t < 0.0) throw NegativeTimeError("need gamma-t >= 0");
  if (o.grid_steps < 2) throw BadParameterError("need grid-steps >= 2");
  if (o.threads < 1) throw BadParameterError("need threads >= 1");
}

std::filesystem::path ensure_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

CsvTable curve_table(const MarginalCurve& c) {
  CsvTable t;
  t.header = {"coordinate", "density"};
  for (size_t i = 0; i < c.coordinate.size(); ++i)
    t.rows.push_back({c.coordinate[i], c.density[i]});
  return t;
}

void write_manifest(const std::filesystem::path& dir, const std::string& cmd,
                    const json& params, const json& scalars, double seconds) {
  json m;
  m["command"] = cmd;
  m["version"] = "1.0.0";
  m["parameters"] = params;
  m["scalars"] = scalars;
  m["wall_time_seconds"] = seconds;
  std::ofstream out(dir / (cmd + "_manifest.json"), std::ios::binary);
  out << m.dump(2) << "\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json bell_rows_json(const std::vector<BellScanRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["parameter"] = r.parameter;
    row["b_max"] = r.result.b_max;
    row["converged"] = r.result.converged;
    arr.push_back(row);
  }
  return arr;
}

CsvTable bell_table(const std::vector<BellScanRow>& rows,
                    const std::string& param_name) {
  CsvTable t;
  t.header = {param_name,  "b_max",   "a_re",  "a_im",  "ap_re", "ap_im",
              "b_re",      "b_im",    "bp_re", "bp_im", "converged"};
  for (const auto& r : rows) {
    const auto& s = r.result.settings;
    t.rows.push_back({r.parameter, r.result.b_max, s[0].real(), s[0].imag(),
                      s[1].real(), s[1].imag(), s[2].real(), s[2].imag(),
                      s[3].real(), s[3].imag(),
                      r.result.converged ? 1.0 : 0.0});
  }
  return t;
}

int check_convergence(const std::vector<BellScanRow>& rows) {
  for (const auto& r : rows)
    if (!r.result.converged) return kExitNotConverged;
  return 0;
}

// ---- subcommands ----

int run_fig1(const CommonOpts& o) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  const StateSum s =
      thermal_superposition(o.variance, o.displacement, {kPi}, o.sign);

  const MarginalCurve cx = marginal(s, 0, 0.0);
  const MarginalCurve cp = marginal(s, 0, kPi / 2.0);
  write_csv((dir / "fig1_x.csv").string(), curve_table(cx));
  write_csv((dir / "fig1_p.csv").string(), curve_table(cp));

  const VisibilityResult v = visibility(s, 0, kPi / 2.0);
  const double spacing = fringe_spacing(s, 0, kPi / 2.0);

  double peak_pos = 0.0, peak_neg = 0.0, vpos = 0.0, vneg = 0.0;
  for (size_t i = 0; i < cx.coordinate.size(); ++i) {
    if (cx.coordinate[i] > 0 && cx.density[i] > vpos) {
      vpos = cx.density[i];
      peak_pos = cx.coordinate[i];
    }
    if (cx.coordinate[i] < 0 && cx.density[i] > vneg) {
      vneg = cx.density[i];
      peak_neg = cx.coordinate[i];
    }
  }

  json scalars;
  scalars["visibility"] = v.v;
  scalars["i_max"] = v.i_max;
  scalars["i_min"] = v.i_min;
  scalars["fringe_spacing"] = spacing;
  scalars["fringe_spacing_law_pi_over_2d"] = kPi / (2.0 * o.displacement);
  scalars["x_peak_positive"] = peak_pos;
  scalars["x_peak_negative"] = peak_neg;
  json params{{"variance", o.variance},
              {"displacement", o.displacement},
              {"sign", o.sign}};
  write_manifest(dir, "fig1", params, scalars, timer.seconds());
  std::cout << "fig1: visibility " << format_number(v.v) << ", spacing "
            << format_number(spacing) << ", x-peaks " << format_number(peak_pos)
            << " / " << format_number(peak_neg) << "\n";
  return 0;
}

int run_fig2(const CommonOpts& o) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);

  json scalars;
  for (int sign : {+1, -1}) {
    const StateSum s =
        thermal_superposition(o.variance, o.displacement, {kPi}, sign);
    const CompiledState cs = compile(s);
    const std::string tag = sign > 0 ? "plus" : "minus";

    CsvTable grid;
    grid.header = {"x", "p", "wigner"};
    const int n = o.grid_steps;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = o.grid_min + (o.grid_max - o.grid_min) * i / (n - 1);
        const double p = o.grid_min + (o.grid_max - o.grid_min) * j / (n - 1);
        PhasePoint pt(1);
        pt << Complex(x, p);
        grid.rows.push_back({x, p, wigner(cs, pt)});
      }
    write_csv((dir / ("fig2_wigner_" + tag + ".csv")).string(), grid);
    write_csv((dir / ("fig2_x_" + tag + ".csv")).string(),
              curve_table(marginal(s, 0, 0.0)));
    write_csv((dir / ("fig2_p_" + tag + ".csv")).string(),
              curve_table(marginal(s, 0, kPi / 2.0)));

    PhasePoint origin(1);
    origin << Complex(0.0, 0.0);
    scalars["wigner_origin_" + tag] = wigner(cs, origin);
  }

  const auto p_trace =
      success_probability_trace(o.variance, o.displacement, kPi);
  const auto p_paper =
      ref::success_probability_paper(o.variance, o.displacement);
  scalars["probability_plus_trace_based"] = p_trace.first;
  scalars["probability_minus_trace_based"] = p_trace.second;
  scalars["probability_plus_paper_formula"] = p_paper.first;
  scalars["probability_minus_paper_formula"] = p_paper.second;

  json params{{"variance", o.variance},
              {"displacement", o.displacement},
              {"grid_min", o.grid_min},
              {"grid_max", o.grid_max},
              {"grid_steps", o.grid_steps}};
  write_manifest(dir, "fig2", params, scalars, timer.seconds());
  std::cout << "fig2: W-(0) = " << format_number(scalars["wigner_origin_minus"])
            << ", W+(0) = " << format_number(scalars["wigner_origin_plus"])
            << ", P- trace-based " << format_number(p_trace.second)
            << " vs paper formula " << format_number(p_paper.second) << "\n";
  return 0;
}

int run_fig3(const CommonOpts& o, double rotation) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  const StateSum s =
      thermal_superposition(o.variance, o.displacement, {o.phi}, o.sign);

  const MarginalCurve cx = marginal(s, 0, rotation);
  const MarginalCurve cp = marginal(s, 0, rotation + kPi / 2.0);
  write_csv((dir / "fig3_xprime.csv").string(), curve_table(cx));
  write_csv((dir / "fig3_pprime.csv").string(), curve_table(cp));

  const VisibilityResult vx = visibility(s, 0, rotation);

  json scalars;
  scalars["visibility_xprime"] = vx.v;
  scalars["fringe_spacing_xprime"] = fringe_spacing(s, 0, rotation);
  scalars["trace"] = trace(s);
  json params{{"variance", o.variance},
              {"displacement", o.displacement},
              {"phi", o.phi},
              {"sign", o.sign},
              {"rotation", rotation}};
  write_manifest(dir, "fig3", params, scalars, timer.seconds());
  std::cout << "fig3: visibility on the rotated fringe axis "
            << format_number(vx.v) << "\n";
  return 0;
}

int run_fig4a(const CommonOpts& o, std::vector<double>& d_list) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  if (d_list.empty()) d_list = {10.0, 30.0, 100.0, 300.0};
  BellOptions bopts;
  bopts.threads = o.threads;

  json scalars;
  int exit_code = 0;
  for (double V : {o.variance}) {
    const auto rows = bell_curve_vs_d(V, d_list, +1, bopts);
    std::ostringstream name;
    name << "fig4a_V" << V << ".csv";
    write_csv((dir / name.str()).string(), bell_table(rows, "d"));
    scalars["V_" + std::to_string(V)] = bell_rows_json(rows);
    exit_code = std::max(exit_code, check_convergence(rows));
  }
  json params{{"variance", o.variance}, {"d_list", d_list}};
  write_manifest(dir, "fig4a", params, scalars, timer.seconds());
  std::cout << "fig4a written (ceiling 2*sqrt(2) = "
            << format_number(2.0 * std::sqrt(2.0)) << ")\n";
  return exit_code;
}

int run_fig4b(const CommonOpts& o, std::vector<double>& v_list) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  if (v_list.empty()) v_list = {10.0, 30.0, 100.0, 300.0, 1000.0};
  BellOptions bopts;
  bopts.threads = o.threads;

  const auto rows = bell_curve_vs_V_split(v_list, 0.0, +1, bopts);
  write_csv((dir / "fig4b.csv").string(), bell_table(rows, "V"));

  json scalars;
  scalars["rows"] = bell_rows_json(rows);
  scalars["asymptote"] = 2.32449;
  scalars["final_gap_to_asymptote"] = 2.32449 - rows.back().result.b_max;
  json params{{"V_list", v_list}};
  write_manifest(dir, "fig4b", params, scalars, timer.seconds());
  std::cout << "fig4b: b_max(V=" << format_number(rows.back().parameter)
            << ") = " << format_number(rows.back().result.b_max)
            << " (asymptote 2.32449)\n";
  return check_convergence(rows);
}

int run_decoherence(const CommonOpts& o, const std::string& preset,
                    std::vector<double>& gt_list) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  if (gt_list.empty()) gt_list = {0.0, 0.02, 0.05, 0.08, 0.1, 0.12, 0.15, 0.2};
  BellOptions bopts;
  bopts.threads = o.threads;

  std::function<StateSum(double)> factory;
  if (preset == "v3d1") {
    factory = [](double gt) {
      StateSum s = bs_split_superposition(3.0, 1.0, {kPi}, -1);
      return apply_loss(apply_loss(s, 0, gt), 1, gt);
    };
  } else if (preset == "cat22") {
    factory = [](double gt) {
      StateSum s = add_vacuum_mode(pure_cat(2.2, +1));
      s = apply_beam_splitter(s, 0, 1, 0.5);
      return apply_loss(apply_loss(s, 0, gt), 1, gt);
    };
  } else if (preset == "v10d0") {
    factory = [](double gt) {
      StateSum s = bs_split_superposition(10.0, 0.0, {kPi}, +1);
      return apply_loss(apply_loss(s, 0, gt), 1, gt);
    };
  } else {
    const CommonOpts c = o;
    factory = [c](double gt) {
      StateSum s = bs_split_superposition(c.variance, c.displacement, {c.phi},
                                          c.sign, c.transmittance);
      return apply_loss(apply_loss(s, 0, gt), 1, gt);
    };
  }

  CsvTable t;
  t.header = {"gamma_t", "b_max", "converged"};
  bool converged = true;
  for (double gt : gt_list) {
    const BellResult r = maximize_bell(factory(gt), bopts);
    t.rows.push_back({gt, r.b_max, r.converged ? 1.0 : 0.0});
    converged = converged && r.converged;
  }
  write_csv((dir / "decoherence.csv").string(), t);

  json scalars;
  try {
    scalars["survival_gamma_t"] = survival_time(factory, bopts);
  } catch (const NoViolationError& e) {
    scalars["survival_gamma_t"] = nullptr;
    scalars["survival_note"] = e.what();
  }
  json params{{"case", preset.empty() ? "custom" : preset},
              {"gamma_t_list", gt_list}};
  write_manifest(dir, "decoherence", params, scalars, timer.seconds());
  if (scalars.contains("survival_gamma_t") &&
      !scalars["survival_gamma_t"].is_null())
    std::cout << "decoherence: crossing at gamma_t = "
              << format_number(scalars["survival_gamma_t"]) << "\n";
  return converged ? 0 : kExitNotConverged;
}

int run_oracle_check_cmd(const CommonOpts& o, bool fast) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);
  OracleCheckOptions opts;
  if (fast) {
    opts.variances = {1.0, 3.0};
    opts.displacements = {0.0, 1.0};
    opts.wigner_points = 8;
    opts.bell_settings = 4;
    opts.include_loss = false;
  }
  const OracleCheckReport r = run_oracle_check(opts);

  json scalars;
  scalars["cases_run"] = r.cases_run;
  scalars["max_wigner_error"] = r.max_wigner_err;
  scalars["max_purity_error"] = r.max_purity_err;
  scalars["max_mean_photon_error"] = r.max_mean_photon_err;
  scalars["max_bell_error"] = r.max_bell_err;
  scalars["max_lossy_bell_error"] = r.max_loss_bell_err;
  scalars["p_minus_trace_based"] = r.p_minus_closed;
  scalars["p_minus_oracle"] = r.p_minus_oracle;
  scalars["p_minus_paper_formula"] = r.p_minus_paper;
  scalars["pass"] = r.pass;
  scalars["failures"] = r.failures;
  write_manifest(dir, "oracle_check", json{{"fast", fast}}, scalars,
                 timer.seconds());

  std::cout << "oracle-check: " << (r.pass ? "PASS" : "FAIL") << " over "
            << r.cases_run << " states; max errors: wigner "
            << format_number(r.max_wigner_err) << ", purity "
            << format_number(r.max_purity_err) << ", bell "
            << format_number(r.max_bell_err) << "\n";
  std::cout << "P- adjudication (V=5, d=1): trace-based "
            << format_number(r.p_minus_closed) << ", oracle "
            << format_number(r.p_minus_oracle) << ", paper formula "
            << format_number(r.p_minus_paper) << "\n";
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  return r.pass ? 0 : kExitOracleMismatch;
}

int run_state_info(const CommonOpts& o, const std::string& which) {
  validate(o);
  Stopwatch timer;
  const auto dir = ensure_dir(o.out_dir);

  StateSum s;
  if (which == "thermal") {
    s = displaced_thermal(o.variance, o.displacement);
  } else if (which == "sup") {
    s = thermal_superposition(o.variance, o.displacement, {o.phi}, o.sign);
  } else if (which == "tm") {
    s = two_mode_thermal_entangled(o.variance, o.displacement, o.sign);
  } else if (which == "cat") {
    s = pure_cat(o.displacement, o.sign);
  } else if (which == "split") {
    s = bs_split_superposition(o.variance, o.displacement, {o.phi}, o.sign,
                               o.transmittance);
  } else {
    throw BadParameterError("unknown state kind: " + which);
  }
  if (o.gamma_t > 0.0)
    for (int m = 0; m < s.num_modes; ++m) s = apply_loss(s, m, o.gamma_t);

  json scalars;
  scalars["kind"] = which;
  scalars["trace"] = trace(s);
  scalars["raw_trace"] = s.norm_constant;
  const double pur = purity(s);
  scalars["purity"] = pur;
  scalars["linear_entropy"] = 1.0 - pur;
  for (int m = 0; m < s.num_modes; ++m)
    scalars["mean_photon_mode" + std::to_string(m)] = mean_photon(s, m);
  scalars["temperature"] = ref::temperature_of_variance(o.variance);
  PhasePoint origin = PhasePoint::Zero(s.point_dim());
  scalars["wigner_origin"] = wigner(s, origin);
  if (which == "sup" || which == "split") {
    const auto pt = success_probability_trace(o.variance, o.displacement, o.phi);
    const auto pp = ref::success_probability_paper(o.variance, o.displacement);
    scalars["probability_plus_trace_based"] = pt.first;
    scalars["probability_minus_trace_based"] = pt.second;
    scalars["probability_plus_paper_formula"] = pp.first;
    scalars["probability_minus_paper_formula"] = pp.second;
  }

  json params{{"variance", o.variance}, {"displacement", o.displacement},
              {"phi", o.phi},           {"sign", o.sign},
              {"gamma_t", o.gamma_t},   {"kind", which}};
  write_manifest(dir, "state_info", params, scalars, timer.seconds());
  std::cout << scalars.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space toolkit for thermal-state superpositions"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* fig1 = app.add_subcommand("fig1", "marginals and visibility of the superposition");
  add_common(fig1, opts);

  auto* fig2 = app.add_subcommand("fig2", "Wigner grids and origin values near d ~ 1");
  add_common(fig2, opts);

  auto* fig3 = app.add_subcommand("fig3", "weak-nonlinearity regime, rotated axes");
  add_common(fig3, opts);
  double rotation = kPi / 2000.0;
  fig3->add_option("--rotation", rotation, "axis rotation (defaults to phi/2)");

  auto* fig4a = app.add_subcommand("fig4a", "optimized violation vs d");
  add_common(fig4a, opts);
  std::vector<double> d_list;
  fig4a->add_option("--d-list", d_list, "displacements to scan");

  auto* fig4b = app.add_subcommand("fig4b", "optimized violation of split states vs V");
  add_common(fig4b, opts);
  std::vector<double> v_list;
  fig4b->add_option("--V-list", v_list, "variances to scan");

  auto* deco = app.add_subcommand("decoherence", "violation under loss, survival time");
  add_common(deco, opts);
  std::string preset;
  deco->add_option("--case", preset, "preset: v3d1, cat22, v10d0");
  std::vector<double> gt_list;
  deco->add_option("--gamma-t-list", gt_list, "loss times to scan");

  auto* oracle = app.add_subcommand("oracle-check", "closed form vs Fock oracle");
  add_common(oracle, opts);
  bool fast = false;
  oracle->add_flag("--fast", fast, "reduced parameter grid");

  auto* info = app.add_subcommand("state-info", "scalar summary of one state");
  add_common(info, opts);
  std::string kind = "sup";
  info->add_option("--state", kind, "thermal, sup, tm, cat, split");

  // Defaults matching the headline parameter sets.
  fig1->callback([&] {
    if (fig1->count("--variance") == 0) opts.variance = 100.0;
    if (fig1->count("--displacement") == 0) opts.displacement = 100.0;
  });
  fig3->callback([&] {
    if (fig3->count("--variance") == 0) opts.variance = 5.0;
    if (fig3->count("--displacement") == 0) opts.displacement = 2000.0;
    if (fig3->count("--phi") == 0) opts.phi = kPi / 1000.0;
    if (fig3->count("--rotation") == 0) rotation = opts.phi / 2.0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadParams;
  }

  try {
    for (CLI::App* sub : {fig1, fig2, fig3, fig4a, fig4b, deco, oracle, info})
      if (sub->parsed()) apply_config(sub, opts);
    if (fig1->parsed()) return run_fig1(opts);
    if (fig2->parsed()) return run_fig2(opts);
    if (fig3->parsed()) return run_fig3(opts, rotation);
    if (fig4a->parsed()) return run_fig4a(opts, d_list);
    if (fig4b->parsed()) return run_fig4b(opts, v_list);
    if (deco->parsed()) return run_decoherence(opts, preset, gt_list);
    if (oracle->parsed()) return run_oracle_check_cmd(opts, fast);
    if (info->parsed()) return run_state_info(opts, kind);
  } catch (const BadParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const ZeroTraceError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
