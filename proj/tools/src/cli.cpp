#include "fsg_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "fsg/dynamics.hpp"
#include "fsg/error.hpp"
#include "fsg/experiments.hpp"
#include "fsg/io/config.hpp"
#include "fsg/io/report_csv.hpp"
#include "fsg/io/snapshot.hpp"
#include "fsg/io/vtk.hpp"
#include "fsg/observables.hpp"
#include "fsg/scenarios.hpp"

namespace fsg::cli {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + p.string() + "' for writing");
  out << text;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

void write_pair(const fs::path& dir, const std::string& stem, const PhysicalPair& uv, const ModelParams& m,
                double time) {
  using io::SnapshotField;
  auto put = [&](const Field& f, SnapshotField tag, const std::string& suffix) {
    io::write_snapshot(dir / (stem + "." + suffix + ".frsg"), f, {f.grid(), m.alpha, m.epsilon, time, tag});
  };
  put(uv.u, SnapshotField::U, "u");
  put(uv.v, SnapshotField::V, "v");
  if (m.is_complex()) {
    put(uv.u, SnapshotField::UIm, "u_im");
    put(uv.v, SnapshotField::VIm, "v_im");
  }
}

void print_report(std::ostream& out, const ConvergenceReport& r) {
  out << r.title << "\n" << io::report_csv(r);
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    if (!r.row_flags[i].empty()) out << "row " << r.row_labels[i] << ": " << r.row_flags[i] << "\n";
  }
}

std::string alpha_tag(double a) { return fmt("%g", a); }

// ---- subcommands -----------------------------------------------------------

struct RunArgs {
  std::string config;
  std::string out;
};

int do_run(const RunArgs& a, std::ostream& out) {
  io::RunConfig c = io::parse_config(a.config);
  if (!a.out.empty()) c.outputs = a.out;
  const fs::path dir = c.outputs;
  ensure_dir(dir);
  write_text(dir / "config.json", io::config_to_json(c));

  const Scenario sc = make_scenario(c.scenario, c.grid);
  ModelParams m = c.model();
  double scale = 1.0;  // config clock -> native clock divisor
  double tau = c.tau;
  if (m.variant == Variant::OscillatorySG) {
    const WrappedRun w = oscillatory_wrap(m, c.tau);
    scale = w.clock.scale();
    tau = w.tau;
    m = w.native;
  }
  const std::size_t steps = c.steps();

  State s = make_state(m, sc.u0, sc.u1);
  const double e0 = state_energy(s);
  std::size_t idx = 0;
  for (double t : c.snapshots) {
    const auto target = static_cast<std::size_t>(std::llround(t / c.tau));
    if (target > s.step) s = evolve(std::move(s), tau, target - s.step);
    write_pair(dir, fmt("snap-%03.0f", static_cast<double>(idx++)), reconstruct_uv(s), m, s.time * scale);
  }
  if (steps > s.step) s = evolve(std::move(s), tau, steps - s.step);
  write_pair(dir, "final", reconstruct_uv(s), m, s.time * scale);
  const double e1 = state_energy(s);
  write_text(dir / "summary.csv", "steps,time,energy0,energy,drift\n" + std::to_string(s.step) + "," +
                                      fmt("%.17g", s.time * scale) + "," + fmt("%.17g", e0) + "," +
                                      fmt("%.17g", e1) + "," + fmt("%.17g", e1 - e0) + "\n");
  out << "run: " << s.step << " steps to t=" << s.time * scale << ", " << idx << " snapshots, energy drift "
      << fmt("%.3e", e1 - e0) << " -> " << dir.string() << "\n";
  return kOk;
}

struct SweepArgs {
  std::string scenario = "smooth2d";
  std::vector<double> alphas{2.0};
  std::vector<double> epsilons{0.5};
  std::vector<double> taus;
  std::vector<std::size_t> ns;
  double horizon = 4.0;
  bool long_time = false;
  double tau_ref = 2.5e-4;
  std::size_t n_ref = 64;
  std::string variant = "real";
  bool linear_only = false;
  std::size_t samples = 0;
  std::string out = "fsg-out";
  std::string cache;
};

SweepPlan make_plan(const SweepArgs& a) {
  SweepPlan p;
  p.scenario = parse_scenario(a.scenario);
  p.alphas = a.alphas;
  p.epsilons = a.epsilons;
  p.taus = a.taus;
  p.ns = a.ns;
  p.horizon = {a.long_time ? HorizonMode::LongTime : HorizonMode::FixedT, a.horizon};
  p.reference = {a.tau_ref, a.n_ref};
  p.variant = parse_variant(a.variant);
  p.linear_only = a.linear_only;
  p.horizon_samples = a.samples;
  return p;
}

std::unique_ptr<ReferenceCache> open_cache(const std::string& cache, const std::string& out_dir, std::ostream& err) {
  auto c = std::make_unique<ReferenceCache>(cache.empty() ? fs::path(out_dir) / "cache" : fs::path(cache));
  c->on_warning = [&err](const std::string& w) { err << "warning: " << w << "\n"; };
  return c;
}

int emit(const std::vector<ConvergenceReport>& reports, const SweepArgs& a, const std::string& kind,
         std::ostream& out) {
  for (const auto& r : reports) {
    const fs::path p = fs::path(a.out) / (kind + "-alpha" + alpha_tag(std::stod(r.metadata.at("alpha"))) + ".csv");
    io::write_report_csv(r, p);
    print_report(out, r);
    out << "-> " << p.string() << "\n";
  }
  return kOk;
}

int do_converge_time(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.taus.empty()) throw ValidationError("converge-time: --tau ladder is required");
  ensure_dir(a.out);
  auto cache = open_cache(a.cache, a.out, err);
  return emit(temporal_sweep(make_plan(a), *cache), a, "temporal", out);
}

int do_converge_space(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.ns.empty()) throw ValidationError("converge-space: --n ladder is required");
  ensure_dir(a.out);
  auto cache = open_cache(a.cache, a.out, err);
  return emit(spatial_sweep(make_plan(a), *cache), a, "spatial", out);
}

int do_energy(const SweepArgs& a, std::ostream& out) {
  if (a.taus.empty()) throw ValidationError("energy: --tau list is required");
  ensure_dir(a.out);
  return emit(energy_sweep(make_plan(a)), a, "energy", out);
}

struct OscArgs {
  double alpha = 2.0;
  bool desk = false;
  bool full = false;
  std::optional<double> lambda0;
  std::optional<std::size_t> depth, eps_depth, n;
  std::optional<double> lambda_ref;
  bool with_velocity = false;
  std::string out = "fsg-out";
  std::string cache;
};

int do_osc_table(const OscArgs& a, std::ostream& out, std::ostream& err) {
  if (a.desk && a.full) throw ValidationError("osc-table: choose one of --desk-scale and --full-scale");
  OscTablePlan plan = a.full ? OscTablePlan::full_scale(a.alpha) : OscTablePlan::desk_scale(a.alpha);
  if (a.lambda0) plan.lambda0 = *a.lambda0;
  if (a.depth) plan.depth = *a.depth;
  if (a.eps_depth) plan.epsilon_depth = *a.eps_depth;
  if (a.n) plan.n = *a.n;
  if (a.lambda_ref) plan.lambda_ref = *a.lambda_ref;
  plan.include_velocity = a.with_velocity;
  ensure_dir(a.out);
  auto cache = open_cache(a.cache, a.out, err);
  const ConvergenceReport r = osc_order_table(plan, *cache);
  const fs::path p = fs::path(a.out) / ("osc-table-alpha" + alpha_tag(a.alpha) + ".csv");
  io::write_report_csv(r, p);
  print_report(out, r);
  out << "-> " << p.string() << "\n";
  return kOk;
}

struct ExportArgs {
  std::string snapshot, target;
  std::string quantity = "sin(u/2)";
};

int do_export(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  const auto q = io::parse_export_quantity(a.quantity);
  io::export_structured_grid(a.snapshot, a.target, q);
  for (const auto& w : io::snapshot_warnings(io::read_snapshot(a.snapshot).meta, std::nullopt, std::nullopt)) {
    err << "warning: " << w << "\n";
  }
  out << "export: " << a.snapshot << " -> " << a.target << "\n";
  return kOk;
}

void add_sweep_options(CLI::App* sub, SweepArgs& a) {
  sub->add_option("--scenario", a.scenario, "scenario id");
  sub->add_option("--alpha", a.alphas, "fractional orders (comma separated)")->delimiter(',');
  sub->add_option("--epsilon", a.epsilons, "epsilon values (comma separated)")->delimiter(',');
  sub->add_option("--horizon", a.horizon, "final time T");
  sub->add_flag("--long-time", a.long_time, "run each epsilon to T/eps^2");
  sub->add_option("--tau-ref", a.tau_ref, "reference time step");
  sub->add_option("--n-ref", a.n_ref, "reference grid points per dimension");
  sub->add_option("--variant", a.variant, "real | complex");
  sub->add_flag("--linear-only", a.linear_only, "drop the nonlinearity (test hook)");
  sub->add_option("--samples", a.samples, "take the max error over this many times up to the horizon");
  sub->add_option("--out", a.out, "output directory");
  sub->add_option("--cache", a.cache, "reference cache directory (default <out>/cache)");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional sine-Gordon TSFP solver"};
  app.name(args.empty() ? "fsg" : args[0]);
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "integrate one trajectory from a JSON config");
  run_cmd->add_option("--config", run.config, "config file")->required();
  run_cmd->add_option("--out", run.out, "output directory (overrides the config)");

  SweepArgs time_args;
  time_args.taus = {4e-2, 2e-2, 1e-2, 5e-3};
  auto* time_cmd = app.add_subcommand("converge-time", "temporal convergence sweep");
  add_sweep_options(time_cmd, time_args);
  time_cmd->add_option("--tau", time_args.taus, "decreasing tau ladder (comma separated)")->delimiter(',');

  SweepArgs space_args;
  space_args.ns = {8, 16, 24, 32};
  auto* space_cmd = app.add_subcommand("converge-space", "spatial convergence sweep");
  add_sweep_options(space_cmd, space_args);
  space_cmd->add_option("--n", space_args.ns, "increasing N ladder (comma separated)")->delimiter(',');

  SweepArgs energy_args;
  energy_args.taus = {1e-2, 5e-3};
  auto* energy_cmd = app.add_subcommand("energy", "discrete energy drift series");
  add_sweep_options(energy_cmd, energy_args);
  energy_cmd->add_option("--tau", energy_args.taus, "tau values (comma separated)")->delimiter(',');

  OscArgs osc;
  auto* osc_cmd = app.add_subcommand("osc-table", "oscillatory complex order table");
  osc_cmd->add_option("--alpha", osc.alpha, "fractional order");
  osc_cmd->add_flag("--desk-scale", osc.desk, "N=64, lambda_ref=1e-4, 3 epsilon rows (default)");
  osc_cmd->add_flag("--full-scale", osc.full, "N=128, lambda_ref=1e-5, 5 epsilon rows");
  osc_cmd->add_option("--lambda0", osc.lambda0, "first lambda");
  osc_cmd->add_option("--depth", osc.depth, "number of lambda columns (<= 5)");
  osc_cmd->add_option("--eps-depth", osc.eps_depth, "number of epsilon rows");
  osc_cmd->add_option("--n", osc.n, "grid points per dimension");
  osc_cmd->add_option("--lambda-ref", osc.lambda_ref, "reference lambda");
  osc_cmd->add_flag("--with-velocity", osc.with_velocity, "add the weighted velocity error to each cell");
  osc_cmd->add_option("--out", osc.out, "output directory");
  osc_cmd->add_option("--cache", osc.cache, "reference cache directory (default <out>/cache)");

  ExportArgs ex;
  auto* export_cmd = app.add_subcommand("export", "snapshot to legacy VTK structured points");
  export_cmd->add_option("snapshot", ex.snapshot, "FRSG snapshot")->required();
  export_cmd->add_option("output", ex.target, "output .vtk path")->required();
  export_cmd->add_option("--quantity", ex.quantity, "u | sin(u/2)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    if (app.get_subcommands().empty()) err << app.help();
    return kValidation;
  }

  try {
    if (*run_cmd) return do_run(run, out);
    if (*time_cmd) return do_converge_time(time_args, out, err);
    if (*space_cmd) return do_converge_space(space_args, out, err);
    if (*energy_cmd) return do_energy(energy_args, out);
    if (*osc_cmd) return do_osc_table(osc, out, err);
    if (*export_cmd) return do_export(ex, out, err);
  } catch (const BlowUpError& e) {
    err << "error: " << e.what() << "\n";
    return kBlowUp;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  err << app.help();
  return kValidation;
}

int cli_dispatch(int argc, char** argv) {
  return cli_dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace fsg::cli
