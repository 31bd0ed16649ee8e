#include "fsg/experiments.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "fsg/error.hpp"
#include "fsg/io/snapshot.hpp"
#include "fsg/observables.hpp"
#include "json.hpp"

namespace fsg {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string file_sha256(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read '" + p.string() + "'");
  return sha256_hex(std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()));
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModelParams sweep_params(const SweepPlan& plan, double alpha, double epsilon) {
  ModelParams m;
  m.alpha = alpha;
  m.epsilon = epsilon;
  m.variant = plan.variant;
  m.linear_only = plan.linear_only;
  return m;
}

void fill_common_metadata(ConvergenceReport& r, const SweepPlan& plan, double alpha) {
  r.metadata["scenario"] = std::string(scenario_id(plan.scenario));
  r.metadata["alpha"] = fmt_g(alpha);
  r.metadata["variant"] = std::string(to_string(plan.variant));
  r.metadata["horizon"] = (plan.horizon.mode == HorizonMode::LongTime ? "T/eps^2, T=" : "t=") + fmt_g(plan.horizon.T);
  r.metadata["clock"] = "native";
  r.metadata["reference.tau"] = fmt_g(plan.reference.tau_ref);
  r.metadata["reference.N"] = std::to_string(plan.reference.n_ref);
  if (plan.linear_only) r.metadata["linear_only"] = "true";
  r.metadata["error"] = plan.horizon_samples == 0
                            ? "||u-u_ref||_{alpha/2} at the horizon"
                            : "max ||u-u_ref||_{alpha/2} over " + std::to_string(plan.horizon_samples) +
                                  " sampled times up to the horizon";
}

std::string failure_text(const BlowUpError& e) {
  return "blow-up at step " + std::to_string(e.step()) + " (t=" + fmt_g(e.time()) + ")";
}

}  // namespace

std::size_t steps_for(double horizon, double tau, std::size_t budget) {
  if (!(tau > 0.0) || !(horizon > 0.0) || !std::isfinite(horizon) || !std::isfinite(tau)) {
    throw ValidationError("steps_for: horizon and tau must be positive and finite");
  }
  const double n = horizon / tau;
  if (n > static_cast<double>(budget)) {
    throw ValidationError("step budget exceeded: " + fmt_g(n) + " steps > " + std::to_string(budget));
  }
  const double rounded = std::round(n);
  if (rounded < 1.0 || std::abs(n - rounded) > 1e-9 * rounded) {
    throw ValidationError("horizon " + fmt_g(horizon) + " is not a whole number of steps of " + fmt_g(tau));
  }
  return static_cast<std::size_t>(rounded);
}

std::vector<double> geometric_ladder(double first, double divisor, std::size_t depth) {
  if (!(first > 0.0) || !(divisor > 1.0)) throw ValidationError("geometric_ladder: need first > 0, divisor > 1");
  std::vector<double> out;
  double v = first;
  for (std::size_t i = 0; i < depth; ++i, v /= divisor) out.push_back(v);
  return out;
}

std::string fraction_label(double value) {
  if (value == 1.0) return "1";
  const double inv = 1.0 / value;
  const double r = std::round(inv);
  if (r >= 2.0 && inv == r && (static_cast<long long>(r) & (static_cast<long long>(r) - 1)) == 0) {
    return "1/" + std::to_string(static_cast<long long>(r));
  }
  return fmt_g(value);
}

void SweepPlan::validate() const {
  if (alphas.empty() || epsilons.empty()) throw ValidationError("sweep: alpha and epsilon lists must be nonempty");
  for (double a : alphas) validate_alpha(a);
  for (double e : epsilons) {
    if (!(e > 0.0 && e <= 1.0)) throw ValidationError("sweep: epsilon must be in (0,1]");
  }
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (!(taus[i] < taus[i - 1])) throw ValidationError("sweep: tau ladder must be strictly decreasing");
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (!(ns[i] > ns[i - 1])) throw ValidationError("sweep: N ladder must be strictly increasing");
  }
  if (variant == Variant::OscillatorySG) throw ValidationError("sweep: use osc_order_table for the oscillatory variant");
  if (!(horizon.T > 0.0)) throw ValidationError("sweep: horizon must be positive");
  if (!(reference.tau_ref > 0.0)) throw ValidationError("sweep: reference tau must be positive");
  for (double e : epsilons) {
    const double h = horizon.native(e);
    steps_for(h, reference.tau_ref, step_budget);
    for (double t : taus) steps_for(h, t, step_budget);
  }
}

std::vector<double> SweepPlan::sample_times(double epsilon) const {
  std::vector<double> out;
  if (horizon_samples == 0) return out;
  const double h = horizon.native(epsilon);
  const double grid = taus.empty() ? reference.tau_ref : std::max(taus.front(), reference.tau_ref);
  for (std::size_t j = 1; j < horizon_samples; ++j) {
    const double t = std::round(h * static_cast<double>(j) / static_cast<double>(horizon_samples) / grid) * grid;
    if (t > 0.0 && t < h && (out.empty() || t > out.back())) out.push_back(t);
  }
  return out;
}

namespace {

// Max over the sampled times and the horizon.
double sampled_error(const ReferenceSolution& run, const ReferenceSolution& ref, double s) {
  double e = error_norm(run.terminal.u, ref.terminal.u, s);
  for (std::size_t i = 0; i < run.snapshots.size(); ++i) {
    e = std::max(e, error_norm(run.snapshots[i].second.u, ref.snapshots.at(i).second.u, s));
  }
  return e;
}

}  // namespace

std::string ReferenceKey::canonical() const {
  json j;
  j["version"] = 1;
  j["scenario"] = std::string(scenario_id(scenario));
  j["alpha"] = params.alpha;
  j["epsilon"] = params.epsilon;
  j["variant"] = std::string(to_string(params.variant));
  j["p"] = params.p;
  j["taylorThreshold"] = params.taylor_threshold;
  j["linearOnly"] = params.linear_only;
  j["conjugateCoupling"] = params.conjugate_coupling;
  j["N"] = points;
  j["tau"] = tau;
  j["horizon"] = horizon;
  j["snapshotTimes"] = snapshot_times;
  return j.dump();
}

std::string ReferenceKey::hash() const { return sha256_hex(canonical()); }

ReferenceSolution run_trajectory(const ReferenceKey& key) {
  if (key.params.variant == Variant::OscillatorySG) {
    throw ValidationError("run_trajectory: wrap the oscillatory variant onto the native clock first");
  }
  const std::size_t total = steps_for(key.horizon, key.tau);
  std::vector<std::size_t> marks;
  for (double t : key.snapshot_times) {
    const double n = std::round(t / key.tau);
    if (t < 0.0 || n > static_cast<double>(total) || std::abs(t / key.tau - n) > 1e-9 * std::max(1.0, n)) {
      throw ValidationError("run_trajectory: snapshot time " + fmt_g(t) + " is not on the step grid");
    }
    marks.push_back(static_cast<std::size_t>(n));
  }

  const Scenario sc = make_scenario(key.scenario, key.points);
  State s = make_state(key.params, sc.u0, sc.u1);

  ReferenceSolution out;
  out.key = key.hash();
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (step, request index)
  for (std::size_t i = 0; i < marks.size(); ++i) order.emplace_back(marks[i], i);
  std::sort(order.begin(), order.end());
  out.snapshots.resize(marks.size());
  for (const auto& [step, idx] : order) {
    if (step > s.step) s = evolve(std::move(s), key.tau, step - s.step);
    out.snapshots[idx] = {s.time, reconstruct_uv(s)};
  }
  if (total > s.step) s = evolve(std::move(s), key.tau, total - s.step);
  out.time = s.time;
  out.terminal = reconstruct_uv(s);
  return out;
}

ReferenceCache::ReferenceCache() = default;

ReferenceCache::ReferenceCache(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(*root_, ec);
  if (ec) throw IoError("cannot create cache directory '" + root_->string() + "': " + ec.message());
}

void ReferenceCache::warn(const std::string& msg) {
  warnings_.push_back(msg);
  if (on_warning) on_warning(msg);
}

namespace {

struct PairFiles {
  std::string prefix;
  bool complex;
  std::vector<std::pair<std::string, io::SnapshotField>> names() const {
    std::vector<std::pair<std::string, io::SnapshotField>> n{{prefix + ".u.frsg", io::SnapshotField::U},
                                                             {prefix + ".v.frsg", io::SnapshotField::V}};
    if (complex) {
      n.push_back({prefix + ".u_im.frsg", io::SnapshotField::UIm});
      n.push_back({prefix + ".v_im.frsg", io::SnapshotField::VIm});
    }
    return n;
  }
};

std::vector<std::string> write_pair(const fs::path& dir, const PairFiles& pf, const PhysicalPair& pr, double time,
                                    const ModelParams& params) {
  std::vector<std::string> written;
  for (const auto& [name, field] : pf.names()) {
    io::SnapshotMeta m{pr.u.grid(), params.alpha, params.epsilon, time, field};
    const bool is_u = field == io::SnapshotField::U || field == io::SnapshotField::UIm;
    io::write_snapshot(dir / name, is_u ? pr.u : pr.v, m);
    written.push_back(name);
  }
  return written;
}

PhysicalPair read_pair(const fs::path& dir, const PairFiles& pf) {
  auto load = [&](const std::string& name) { return io::read_snapshot(dir / name).field; };
  Field u = load(pf.prefix + ".u.frsg");
  Field v = load(pf.prefix + ".v.frsg");
  if (pf.complex) {
    const Field ui = load(pf.prefix + ".u_im.frsg");
    const Field vi = load(pf.prefix + ".v_im.frsg");
    if (ui.size() != u.size() || vi.size() != v.size()) throw IoError("cache: component size mismatch");
    for (std::size_t j = 0; j < u.size(); ++j) {
      u[j] = Complex(u[j].real(), ui[j].real());
      v[j] = Complex(v[j].real(), vi[j].real());
    }
  }
  return {std::move(u), std::move(v)};
}

}  // namespace

std::optional<ReferenceSolution> ReferenceCache::load(const ReferenceKey& key, const std::string& hash) {
  const fs::path dir = *root_ / hash;
  if (!fs::exists(dir / "meta.json")) return std::nullopt;
  try {
    std::ifstream in(dir / "meta.json");
    const json meta = json::parse(in);
    if (meta.at("key").get<std::string>() != key.canonical()) throw IoError("key text does not match");
    for (const auto& [name, digest] : meta.at("files").items()) {
      if (file_sha256(dir / name) != digest.get<std::string>()) throw IoError("hash mismatch for " + name);
    }
    const bool cplx = key.params.is_complex();
    ReferenceSolution sol;
    sol.key = hash;
    sol.time = meta.at("time").get<double>();
    sol.terminal = read_pair(dir, {"terminal", cplx});
    const auto times = meta.at("snapshotTimes").get<std::vector<double>>();
    for (std::size_t i = 0; i < times.size(); ++i) {
      sol.snapshots.emplace_back(times[i], read_pair(dir, {"snap-" + std::to_string(i), cplx}));
    }
    if (sol.snapshots.size() != key.snapshot_times.size()) throw IoError("snapshot count mismatch");
    sol.from_cache = true;
    return sol;
  } catch (const std::exception& e) {
    warn("reference cache entry " + hash + " is corrupt (" + e.what() + "); recomputing");
    std::error_code ec;
    fs::remove_all(dir, ec);
    return std::nullopt;
  }
}

void ReferenceCache::store(const ReferenceKey& key, const std::string& hash, const ReferenceSolution& sol) {
  const fs::path dir = *root_ / hash;
  const fs::path tmp = *root_ / (hash + ".tmp");
  std::error_code ec;
  fs::remove_all(tmp, ec);
  fs::create_directories(tmp);
  const bool cplx = key.params.is_complex();
  json files = json::object();
  auto add = [&](const std::vector<std::string>& names) {
    for (const auto& n : names) files[n] = file_sha256(tmp / n);
  };
  add(write_pair(tmp, {"terminal", cplx}, sol.terminal, sol.time, key.params));
  json times = json::array();
  for (std::size_t i = 0; i < sol.snapshots.size(); ++i) {
    add(write_pair(tmp, {"snap-" + std::to_string(i), cplx}, sol.snapshots[i].second, sol.snapshots[i].first,
                   key.params));
    times.push_back(sol.snapshots[i].first);
  }
  json meta;
  meta["key"] = key.canonical();
  meta["time"] = sol.time;
  meta["snapshotTimes"] = times;
  meta["files"] = files;
  {
    std::ofstream out(tmp / "meta.json", std::ios::trunc);
    if (!out) throw IoError("cannot write cache meta.json");
    out << meta.dump(2) << "\n";
  }
  fs::remove_all(dir, ec);
  fs::rename(tmp, dir, ec);
  if (ec) throw IoError("cannot publish cache entry '" + dir.string() + "': " + ec.message());
}

ReferenceSolution ReferenceCache::get(const ReferenceKey& key) {
  std::lock_guard<std::mutex> lock(mutex_);
  const std::string hash = key.hash();
  if (auto it = memo_.find(hash); it != memo_.end()) {
    ReferenceSolution sol = it->second;
    sol.from_cache = true;
    return sol;
  }
  if (root_) {
    if (auto sol = load(key, hash)) {
      memo_.emplace(hash, *sol);
      return *sol;
    }
  }
  ReferenceSolution sol = run_trajectory(key);
  ++computations_;
  if (root_) store(key, hash, sol);
  memo_.emplace(hash, sol);
  return sol;
}

ReferenceSolution reference_solution(ReferenceCache& cache, const ReferenceKey& key) { return cache.get(key); }

std::vector<ConvergenceReport> temporal_sweep(const SweepPlan& plan, ReferenceCache& cache) {
  plan.validate();
  std::vector<ConvergenceReport> reports;
  for (double alpha : plan.alphas) {
    const auto t0 = std::chrono::steady_clock::now();
    ConvergenceReport r;
    r.title = "temporal errors, alpha=" + fmt_g(alpha);
    r.column_axis = "tau";
    r.rows = plan.epsilons;
    r.columns = plan.taus;
    r.resize();
    std::string keys;
    std::size_t budget = 0;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const double eps = r.rows[i];
      r.row_labels[i] = fraction_label(eps);
      ReferenceKey key{plan.scenario, sweep_params(plan, alpha, eps), {plan.reference.n_ref}, plan.reference.tau_ref,
                       plan.horizon.native(eps), plan.sample_times(eps)};
      std::optional<ReferenceSolution> ref;
      std::string ref_failure;
      try {
        ref = cache.get(key);
        keys += (keys.empty() ? "" : ",") + ref->key;
      } catch (const BlowUpError& e) {
        ref_failure = "reference " + failure_text(e);
      }
      budget += steps_for(key.horizon, key.tau);
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        r.column_labels[c] = fmt_g(r.columns[c]);
        auto& cell = r.cells[i][c];
        budget += steps_for(key.horizon, r.columns[c]);
        if (!ref) {
          cell.failure = ref_failure;
          continue;
        }
        ReferenceKey run = key;
        run.tau = r.columns[c];
        try {
          cell.error = sampled_error(run_trajectory(run), *ref, alpha / 2.0);
        } catch (const BlowUpError& e) {
          cell.failure = failure_text(e);
        }
      }
    }
    r.compute_orders();
    r.compute_row_ratios();
    fill_common_metadata(r, plan, alpha);
    r.metadata["reference.keys"] = keys;
    r.metadata["step_budget"] = std::to_string(budget);
    r.metadata["wall_seconds"] = fmt_g(seconds_since(t0));
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<ConvergenceReport> spatial_sweep(const SweepPlan& plan, ReferenceCache& cache) {
  plan.validate();
  if (plan.ns.empty()) throw ValidationError("spatial_sweep: N ladder is empty");
  std::vector<ConvergenceReport> reports;
  for (double alpha : plan.alphas) {
    const auto t0 = std::chrono::steady_clock::now();
    ConvergenceReport r;
    r.title = "spatial errors, alpha=" + fmt_g(alpha);
    r.column_axis = "N";
    r.rows = plan.epsilons;
    for (std::size_t n : plan.ns) r.columns.push_back(static_cast<double>(n));
    r.resize();
    std::string keys;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const double eps = r.rows[i];
      r.row_labels[i] = fraction_label(eps);
      ReferenceKey key{plan.scenario, sweep_params(plan, alpha, eps), {plan.reference.n_ref}, plan.reference.tau_ref,
                       plan.horizon.native(eps), plan.sample_times(eps)};
      std::optional<ReferenceSolution> ref;
      std::string ref_failure;
      try {
        ref = cache.get(key);
        keys += (keys.empty() ? "" : ",") + ref->key;
      } catch (const BlowUpError& e) {
        ref_failure = "reference " + failure_text(e);
      }
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        r.column_labels[c] = std::to_string(plan.ns[c]);
        auto& cell = r.cells[i][c];
        if (!ref) {
          cell.failure = ref_failure;
          continue;
        }
        ReferenceKey run = key;
        run.points = {plan.ns[c]};
        try {
          cell.error = sampled_error(run_trajectory(run), *ref, alpha / 2.0);
        } catch (const BlowUpError& e) {
          cell.failure = failure_text(e);
        }
      }
      // Spectral: each rung gains >= 10x until the error reaches 1e-8.
      bool spectral = r.columns.size() > 1;
      for (std::size_t c = 1; c < r.columns.size() && spectral; ++c) {
        const auto& a = r.cells[i][c - 1].error;
        const auto& b = r.cells[i][c].error;
        if (!a || !b) {
          spectral = false;
        } else if (*a <= 1e-8) {
          break;
        } else if (!(*b <= *a / 10.0)) {
          spectral = false;
        }
      }
      r.row_flags[i] = spectral ? "spectral" : "";
    }
    r.compute_orders();
    r.compute_row_ratios();
    fill_common_metadata(r, plan, alpha);
    r.metadata["reference.keys"] = keys;
    r.metadata["wall_seconds"] = fmt_g(seconds_since(t0));
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<ConvergenceReport> energy_sweep(const SweepPlan& plan) {
  plan.validate();
  std::vector<ConvergenceReport> reports;
  for (double alpha : plan.alphas) {
    const auto t0 = std::chrono::steady_clock::now();
    ConvergenceReport r;
    r.title = "energy drift, alpha=" + fmt_g(alpha);
    r.column_axis = "tau";
    r.rows = plan.epsilons;
    r.columns = plan.taus;
    r.resize();
    r.energy_series.resize(r.columns.size());
    const Scenario sc = make_scenario(plan.scenario, std::vector<std::size_t>{plan.reference.n_ref});
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const double eps = r.rows[i];
      r.row_labels[i] = fraction_label(eps);
      const ModelParams params = sweep_params(plan, alpha, eps);
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        r.column_labels[c] = fmt_g(r.columns[c]);
        auto& cell = r.cells[i][c];
        const std::size_t steps = steps_for(plan.horizon.native(eps), r.columns[c], plan.step_budget);
        EnergyTracker tracker;
        const Observer obs{1, [&](const State& s) { tracker.record(s); }};
        try {
          (void)evolve(make_state(params, sc.u0, sc.u1), r.columns[c], steps, std::span<const Observer>(&obs, 1));
          cell.error = tracker.max_abs_drift();
        } catch (const BlowUpError& e) {
          cell.failure = failure_text(e);
        }
        if (i == 0) r.energy_series[c] = tracker.samples();
      }
    }
    r.compute_orders();
    r.compute_row_ratios();
    fill_common_metadata(r, plan, alpha);
    r.metadata["reference.tau"] = "-";
    r.metadata["wall_seconds"] = fmt_g(seconds_since(t0));
    reports.push_back(std::move(r));
  }
  return reports;
}

OscTablePlan OscTablePlan::desk_scale(double alpha) {
  OscTablePlan p;
  p.alpha = alpha;
  return p;
}

OscTablePlan OscTablePlan::full_scale(double alpha) {
  OscTablePlan p;
  p.alpha = alpha;
  p.epsilon_depth = 5;
  p.n = 128;
  p.lambda_ref = 1e-5;
  return p;
}

bool in_upper_triangle(std::size_t row, std::size_t column) { return column > row; }

ConvergenceReport osc_order_table(const OscTablePlan& plan, ReferenceCache& cache) {
  if (plan.depth < 1 || plan.depth > 5) throw ValidationError("osc_order_table: depth must be in [1,5]");
  if (plan.epsilon_depth < 1) throw ValidationError("osc_order_table: epsilon depth must be >= 1");
  validate_alpha(plan.alpha);
  const auto t0 = std::chrono::steady_clock::now();

  ConvergenceReport r;
  r.title = "oscillatory temporal errors, alpha=" + fmt_g(plan.alpha);
  r.column_axis = "lambda";
  r.rows = geometric_ladder(1.0, 2.0, plan.epsilon_depth);
  r.columns = geometric_ladder(plan.lambda0, 4.0, plan.depth);
  r.resize();
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    r.column_labels[c] = c == 0 ? "lambda0=" + fmt_g(plan.lambda0)
                                : (c == 1 ? std::string("lambda0/4") : "lambda0/4^" + std::to_string(c));
  }

  std::string keys;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const double eps = r.rows[i];
    r.row_labels[i] = fraction_label(eps);
    ModelParams osc;
    osc.alpha = plan.alpha;
    osc.epsilon = eps;
    osc.variant = Variant::OscillatorySG;
    osc.p = plan.p;
    const WrappedRun ref_wrap = oscillatory_wrap(osc, plan.lambda_ref);
    ReferenceKey key{ScenarioName::OscComplex2D, ref_wrap.native, {plan.n}, ref_wrap.tau,
                     ref_wrap.clock.native_time(plan.s_horizon), {}};
    std::optional<ReferenceSolution> ref;
    std::string ref_failure;
    try {
      ref = cache.get(key);
      keys += (keys.empty() ? "" : ",") + ref->key;
    } catch (const BlowUpError& e) {
      ref_failure = "reference " + failure_text(e);
    }
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      auto& cell = r.cells[i][c];
      cell.marked = c == i;
      if (!ref) {
        cell.failure = ref_failure;
        continue;
      }
      const WrappedRun w = oscillatory_wrap(osc, r.columns[c]);
      ReferenceKey run = key;
      run.tau = w.tau;
      try {
        const ReferenceSolution sol = run_trajectory(run);
        double e = error_norm(sol.terminal.u, ref->terminal.u, plan.alpha / 2.0);
        if (plan.include_velocity) e += error_norm(sol.terminal.v, ref->terminal.v, 0.0);
        cell.error = e;
      } catch (const BlowUpError& e) {
        cell.failure = failure_text(e);
      }
    }
  }
  r.compute_orders();
  r.compute_row_ratios();
  r.metadata["scenario"] = std::string(scenario_id(ScenarioName::OscComplex2D));
  r.metadata["alpha"] = fmt_g(plan.alpha);
  r.metadata["variant"] = "oscillatory";
  r.metadata["p"] = std::to_string(plan.p);
  r.metadata["clock"] = "s = eps^(2p) t, horizon s=" + fmt_g(plan.s_horizon);
  r.metadata["N"] = std::to_string(plan.n);
  r.metadata["reference.lambda"] = fmt_g(plan.lambda_ref);
  r.metadata["reference.N"] = std::to_string(plan.n);
  r.metadata["reference.keys"] = keys;
  r.metadata["error"] = plan.include_velocity ? "||u-u_ref||_{alpha/2} + ||v-v_ref||_0 (native v)"
                                              : "||u-u_ref||_{alpha/2}";
  r.metadata["wall_seconds"] = fmt_g(seconds_since(t0));
  return r;
}

}  // namespace fsg
