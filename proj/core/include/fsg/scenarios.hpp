#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsg/field.hpp"
#include "fsg/grid.hpp"
#include "fsg/model.hpp"

namespace fsg {

enum class ScenarioName {
  Smooth2D,
  Smooth3D,
  OscComplex2D,
  EllipticRing2D,
  TwoCircular2D,
  TwoCircular3D,
  FourCircular3D,
};

/// Stable identifiers: smooth2d, smooth3d, osc-complex-2d, elliptic-ring-2d,
/// two-circular-2d, two-circular-3d, four-circular-3d.
std::string_view scenario_id(ScenarioName name);
ScenarioName parse_scenario(std::string_view id);
std::vector<ScenarioName> all_scenarios();

struct ScenarioSpec {
  ScenarioName name;
  GridSpec grid;
  Variant default_variant = Variant::RealSG;
  double default_epsilon = 1.0;
  double default_tau = 1e-3;
  bool complex_data = false;
};

struct Scenario {
  ScenarioSpec spec;
  Field u0;
  Field u1;
};

/// Samples the named initial data. Default resolution is N=128 per dimension in
/// 2D and N=64 in 3D; override_points replaces it (one entry per dimension, or a
/// single entry applied to all).
Scenario make_scenario(ScenarioName name, std::optional<std::vector<std::size_t>> override_points = std::nullopt);
Scenario make_scenario(std::string_view id, std::optional<std::vector<std::size_t>> override_points = std::nullopt);

}  // namespace fsg
