#include "fsg/scenarios.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fsg/error.hpp"

namespace fsg {

namespace {

using std::numbers::pi;

struct CatalogEntry {
  ScenarioName name;
  std::string_view id;
};

constexpr std::array kCatalog{
    CatalogEntry{ScenarioName::Smooth2D, "smooth2d"},
    CatalogEntry{ScenarioName::Smooth3D, "smooth3d"},
    CatalogEntry{ScenarioName::OscComplex2D, "osc-complex-2d"},
    CatalogEntry{ScenarioName::EllipticRing2D, "elliptic-ring-2d"},
    CatalogEntry{ScenarioName::TwoCircular2D, "two-circular-2d"},
    CatalogEntry{ScenarioName::TwoCircular3D, "two-circular-3d"},
    CatalogEntry{ScenarioName::FourCircular3D, "four-circular-3d"},
};

// Circular ring soliton of radius 4 and width 0.436 around `center`.
double ring_u0(std::span<const double> x, std::span<const double> center) {
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
  return 4.0 * std::atan(std::exp((4.0 - std::sqrt(r2)) / 0.436));
}

double ring_u1(std::span<const double> x, std::span<const double> center) {
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
  return 4.13 / std::cosh((4.0 - std::sqrt(r2)) / 0.436);
}

std::vector<std::size_t> resolve_points(int dim, const std::optional<std::vector<std::size_t>>& override_points) {
  const std::size_t def = dim == 2 ? 128 : 64;
  if (!override_points || override_points->empty()) return std::vector<std::size_t>(static_cast<std::size_t>(dim), def);
  if (override_points->size() == 1) return std::vector<std::size_t>(static_cast<std::size_t>(dim), override_points->front());
  if (override_points->size() != static_cast<std::size_t>(dim)) {
    throw ValidationError("scenario: grid override needs 1 or " + std::to_string(dim) + " entries");
  }
  return *override_points;
}

}  // namespace

std::string_view scenario_id(ScenarioName name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.id;
  }
  return "unknown";
}

ScenarioName parse_scenario(std::string_view id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e.name;
  }
  throw ValidationError("unknown scenario '" + std::string(id) + "'");
}

std::vector<ScenarioName> all_scenarios() {
  std::vector<ScenarioName> out;
  for (const auto& e : kCatalog) out.push_back(e.name);
  return out;
}

Scenario make_scenario(std::string_view id, std::optional<std::vector<std::size_t>> override_points) {
  return make_scenario(parse_scenario(id), std::move(override_points));
}

Scenario make_scenario(ScenarioName name, std::optional<std::vector<std::size_t>> override_points) {
  using Fn = std::function<Complex(std::span<const double>)>;
  std::vector<Interval> domain;
  Fn u0;
  Fn u1;
  ScenarioSpec spec{name, {}, Variant::RealSG, 1.0, 1e-3, false};

  switch (name) {
    case ScenarioName::Smooth2D:
      domain = {{0.0, 1.0}, {0.0, 2.0 * pi}};
      u0 = [](auto x) {
        const double c = std::cos(2.0 * pi * x[0] + x[1]);
        return Complex(2.0 / (2.0 + c * c));
      };
      u1 = [](auto x) {
        const double c = std::cos(2.0 * pi * x[0] + x[1]);
        return Complex(2.0 / (2.0 + 2.0 * c * c));
      };
      break;
    case ScenarioName::Smooth3D:
      domain = {{0.0, 2.0}, {0.0, 2.0 * pi}, {0.0, 2.0 * pi}};
      u0 = [](auto x) {
        const double s = std::sin(2.0 * pi * x[0] + x[1] + x[2]);
        return Complex(1.0 / (1.0 + s * s));
      };
      u1 = [](auto x) {
        const double s = std::sin(2.0 * pi * x[0] + x[1] + x[2]);
        return Complex(2.0 / (1.0 + s * s));
      };
      break;
    case ScenarioName::OscComplex2D:
      domain = {{0.0, 1.0}, {0.0, 1.0}};
      spec.default_variant = Variant::OscillatorySG;
      spec.complex_data = true;
      spec.default_tau = 1e-5;
      u0 = [](auto x) {
        const double a = x[0], b = x[1];
        return Complex(a * a * (a - 1.0) * (a - 1.0) + b * (b - 1.0), 6.0);
      };
      u1 = [](auto x) {
        const double a = x[0], b = x[1];
        return Complex(a * (a - 1.0) * (2.0 * a - 1.0) + b * b * (b - 1.0) * (b - 1.0),
                       std::cos(2.0 * pi * a + 2.0 * pi * b));
      };
      break;
    case ScenarioName::EllipticRing2D:
      domain = {{-7.0, 7.0}, {-7.0, 7.0}};
      u0 = [](auto x) {
        const double d = x[0] - x[1], s = x[0] + x[1];
        return Complex(4.0 * std::atan(std::exp(3.0 - std::sqrt(d * d / 3.0 + s * s / 2.0))));
      };
      u1 = [](auto) { return Complex(0.0); };
      break;
    case ScenarioName::TwoCircular2D: {
      domain = {{-30.0, 10.0}, {-21.0, 7.0}};
      static constexpr std::array<double, 2> c{-3.0, -7.0};
      u0 = [](auto x) { return Complex(ring_u0(x, c)); };
      u1 = [](auto x) { return Complex(ring_u1(x, c)); };
      break;
    }
    case ScenarioName::TwoCircular3D: {
      domain = {{-30.0, 10.0}, {-21.0, 7.0}, {-21.0, 7.0}};
      static constexpr std::array<double, 3> c{-3.0, -7.0, -7.0};
      u0 = [](auto x) { return Complex(ring_u0(x, c)); };
      u1 = [](auto x) { return Complex(ring_u1(x, c)); };
      break;
    }
    case ScenarioName::FourCircular3D: {
      domain = {{-30.0, 10.0}, {-30.0, 10.0}, {-30.0, 10.0}};
      static constexpr std::array<double, 3> c{-3.0, 0.0, -3.0};
      u0 = [](auto x) { return Complex(ring_u0(x, c)); };
      u1 = [](auto x) { return Complex(ring_u1(x, c)); };
      break;
    }
  }

  const int dim = static_cast<int>(domain.size());
  spec.grid = GridSpec(domain, resolve_points(dim, override_points));
  Scenario out{spec, Field::sample(spec.grid, u0), Field::sample(spec.grid, u1)};
  if (!out.u0.all_finite() || !out.u1.all_finite()) {
    throw std::logic_error("scenario '" + std::string(scenario_id(name)) + "' sampled a non-finite value");
  }
  return out;
}

}  // namespace fsg
