#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsg/dynamics.hpp"
#include "fsg/model.hpp"
#include "fsg/report.hpp"
#include "fsg/scenarios.hpp"

namespace fsg {

inline constexpr std::size_t kStepGuardrail = 10'000'000;

/// Number of steps of size tau covering [0, horizon]; throws ValidationError
/// when the horizon is not a whole number of steps or exceeds the budget.
std::size_t steps_for(double horizon, double tau, std::size_t budget = kStepGuardrail);

/// first, first/divisor, ..., depth entries.
std::vector<double> geometric_ladder(double first, double divisor, std::size_t depth);

/// "1", "1/2", "1/4", ... for powers of two, %g otherwise.
std::string fraction_label(double value);

enum class HorizonMode { FixedT, LongTime };

struct Horizon {
  HorizonMode mode = HorizonMode::FixedT;
  double T = 1.0;
  double native(double epsilon) const { return mode == HorizonMode::LongTime ? T / (epsilon * epsilon) : T; }
};

struct ReferencePolicy {
  double tau_ref = 2.5e-4;
  std::size_t n_ref = 64;
};

struct SweepPlan {
  ScenarioName scenario = ScenarioName::Smooth2D;
  std::vector<double> alphas{2.0};
  std::vector<double> epsilons{1.0};
  std::vector<double> taus;        ///< temporal / energy ladders
  std::vector<std::size_t> ns;     ///< spatial ladder
  Horizon horizon;
  ReferencePolicy reference;
  Variant variant = Variant::RealSG;  ///< RealSG or ComplexSG
  bool linear_only = false;
  std::size_t step_budget = kStepGuardrail;
  /// 0: error at the horizon only. k > 0: max error over k equally spaced
  /// times in (0, horizon], snapped to multiples of the coarsest tau.
  std::size_t horizon_samples = 0;

  void validate() const;
  std::vector<double> sample_times(double epsilon) const;
};

/// Everything that determines a reference trajectory.
struct ReferenceKey {
  ScenarioName scenario = ScenarioName::Smooth2D;
  ModelParams params;
  std::vector<std::size_t> points;  ///< one entry (uniform) or one per dimension
  double tau = 2.5e-4;
  double horizon = 1.0;             ///< native clock
  std::vector<double> snapshot_times;

  std::string canonical() const;    ///< JSON text hashed for the cache key
  std::string hash() const;         ///< SHA-256 hex of canonical()
};

struct ReferenceSolution {
  std::string key;
  double time = 0.0;
  PhysicalPair terminal;
  std::vector<std::pair<double, PhysicalPair>> snapshots;
  bool from_cache = false;
};

/// Reference trajectories, memoized in memory and optionally on disk under
/// <root>/<sha256>/ (meta.json + FRSG snapshots).
class ReferenceCache {
 public:
  ReferenceCache();
  explicit ReferenceCache(std::filesystem::path root);

  ReferenceSolution get(const ReferenceKey& key);

  std::size_t computations() const { return computations_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::optional<std::filesystem::path>& root() const { return root_; }
  std::function<void(const std::string&)> on_warning;

 private:
  std::optional<ReferenceSolution> load(const ReferenceKey& key, const std::string& hash);
  void store(const ReferenceKey& key, const std::string& hash, const ReferenceSolution& sol);
  void warn(const std::string& msg);

  std::optional<std::filesystem::path> root_;
  std::map<std::string, ReferenceSolution> memo_;
  std::mutex mutex_;
  std::size_t computations_ = 0;
  std::vector<std::string> warnings_;
};

ReferenceSolution reference_solution(ReferenceCache& cache, const ReferenceKey& key);

/// Evolves a scenario to `horizon` with step tau and returns (u, v) there plus
/// at each requested time. Throws BlowUpError.
ReferenceSolution run_trajectory(const ReferenceKey& key);

/// One report per alpha: rows epsilon, columns tau, errors ||u - u_ref||_{alpha/2}.
std::vector<ConvergenceReport> temporal_sweep(const SweepPlan& plan, ReferenceCache& cache);
/// One report per alpha: rows epsilon, columns N; tau fixed at tau_ref.
std::vector<ConvergenceReport> spatial_sweep(const SweepPlan& plan, ReferenceCache& cache);
/// One report per alpha: rows epsilon, columns tau, cells max |E^n - E^0|
/// on the reference grid. Series for every column of the first row.
std::vector<ConvergenceReport> energy_sweep(const SweepPlan& plan);

struct OscTablePlan {
  double alpha = 2.0;
  double lambda0 = 0.05;
  std::size_t depth = 5;
  std::size_t epsilon_depth = 3;
  int p = 1;
  std::size_t n = 64;
  double lambda_ref = 1e-4;
  double s_horizon = 1.0;
  bool include_velocity = false;

  static OscTablePlan desk_scale(double alpha);
  static OscTablePlan full_scale(double alpha);
};

/// Rows eps = 1, 1/2, ...; columns lambda0/4^j. Cell error is
/// ||u - u_ref||_{alpha/2} at s = s_horizon; with include_velocity the
/// weighted velocity term eps^{2p} ||d_s w - d_s w_ref||_0 (= ||v - v_ref||_0
/// on the native clock) is added. Diagonal cells are marked.
ConvergenceReport osc_order_table(const OscTablePlan& plan, ReferenceCache& cache);

/// Order entries strictly right of the marked diagonal.
bool in_upper_triangle(std::size_t row, std::size_t column);

}  // namespace fsg
