#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsg/model.hpp"
#include "fsg/scenarios.hpp"

namespace fsg::io {

/// Run configuration (strict JSON). Keys:
///   scenario (required), alpha, epsilon, tau, horizon {"t": T} | {"longTime": T},
///   grid [N] | [N1, N2(, N3)], variant, p, snapshots [times], outputs, taylorThreshold.
/// For the oscillatory variant tau and horizon are on the rescaled clock.
struct RunConfig {
  std::string scenario;
  double alpha = 2.0;
  double epsilon = 1.0;
  double tau = 1e-3;
  bool long_time = false;
  double horizon = 1.0;
  std::optional<std::vector<std::size_t>> grid;
  std::string variant;  ///< empty until resolved from the scenario default
  int p = 1;
  std::vector<double> snapshots;
  std::string outputs = "out";
  double taylor_threshold = 1e-2;

  /// Final time on the clock that tau is measured in (T or T/eps^2).
  double end_time() const;
  std::size_t steps() const;
  ModelParams model() const;
};

RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_text(std::string_view text, std::string_view origin = "<config>");
/// Fully resolved config as pretty JSON (defaults filled).
std::string config_to_json(const RunConfig& config);

}  // namespace fsg::io
