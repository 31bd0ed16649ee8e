#include "fsg/io/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include "fsg/error.hpp"
#include "json.hpp"

namespace fsg::io {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key" used as an object key.
std::size_t line_of_key(std::string_view text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t q = pos + quoted.size();
    while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    if (q < text.size() && text[q] == ':') return line_of_offset(text, pos);
    pos += quoted.size();
  }
  return 0;
}

struct Ctx {
  std::string_view text;
  std::string origin;

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const std::size_t line = line_of_key(text, key);
    std::string where = origin;
    if (line > 0) where += ":" + std::to_string(line);
    throw ValidationError(where + ": " + msg);
  }

  double number(const json& j, const std::string& key) const {
    if (!j.is_number()) fail(key, "'" + key + "' must be a number");
    const double d = j.get<double>();
    if (!std::isfinite(d)) fail(key, "'" + key + "' must be finite");
    return d;
  }

  void check_keys(const json& obj, const std::set<std::string>& allowed) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!allowed.count(it.key())) fail(it.key(), "unknown key '" + it.key() + "'");
    }
  }
};

}  // namespace

double RunConfig::end_time() const { return long_time ? horizon / (epsilon * epsilon) : horizon; }

std::size_t RunConfig::steps() const {
  const double n = end_time() / tau;
  const double rounded = std::round(n);
  if (rounded < 1.0 || std::abs(n - rounded) > 1e-6 * std::max(1.0, rounded)) {
    throw ValidationError("horizon " + std::to_string(end_time()) + " is not a whole number of steps of " +
                          std::to_string(tau));
  }
  return static_cast<std::size_t>(rounded);
}

ModelParams RunConfig::model() const {
  ModelParams m;
  m.alpha = alpha;
  m.epsilon = epsilon;
  m.variant = parse_variant(variant);
  m.p = p;
  m.taylor_threshold = taylor_threshold;
  return m;
}

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
  Ctx ctx{text, std::string(origin)};
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(ctx.origin + ":" + std::to_string(line_of_offset(text, e.byte)) +
                          ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw ValidationError(ctx.origin + ": top level must be a JSON object");
  ctx.check_keys(j, {"scenario", "alpha", "epsilon", "tau", "horizon", "grid", "variant", "p", "snapshots",
                     "outputs", "taylorThreshold"});

  RunConfig c;
  if (!j.contains("scenario") || !j["scenario"].is_string()) {
    throw ValidationError(ctx.origin + ": 'scenario' (string) is required");
  }
  c.scenario = j["scenario"].get<std::string>();
  ScenarioName name;
  try {
    name = parse_scenario(c.scenario);
  } catch (const ValidationError& e) {
    ctx.fail("scenario", e.what());
  }
  const Scenario sc = make_scenario(name, std::vector<std::size_t>{4});
  c.epsilon = sc.spec.default_epsilon;
  c.tau = 1e-3;
  c.variant = std::string(to_string(sc.spec.default_variant));

  if (j.contains("alpha")) c.alpha = ctx.number(j["alpha"], "alpha");
  if (!(c.alpha > 1.0 && c.alpha <= 2.0)) ctx.fail("alpha", "alpha must be in (1,2]");
  if (j.contains("epsilon")) c.epsilon = ctx.number(j["epsilon"], "epsilon");
  if (!(c.epsilon > 0.0 && c.epsilon <= 1.0)) ctx.fail("epsilon", "epsilon must be in (0,1]");
  if (j.contains("tau")) c.tau = ctx.number(j["tau"], "tau");
  if (!(c.tau > 0.0)) ctx.fail("tau", "tau must be positive");
  if (j.contains("taylorThreshold")) c.taylor_threshold = ctx.number(j["taylorThreshold"], "taylorThreshold");
  if (!(c.taylor_threshold > 0.0 && c.taylor_threshold < 1.0)) {
    ctx.fail("taylorThreshold", "taylorThreshold must be in (0,1)");
  }
  if (j.contains("p")) {
    if (!j["p"].is_number_integer()) ctx.fail("p", "'p' must be an integer");
    c.p = j["p"].get<int>();
    if (c.p < 0) ctx.fail("p", "p must be nonnegative");
  }
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) ctx.fail("variant", "'variant' must be a string");
    c.variant = j["variant"].get<std::string>();
    try {
      (void)parse_variant(c.variant);
    } catch (const ValidationError& e) {
      ctx.fail("variant", e.what());
    }
  }
  if (sc.spec.complex_data && c.variant == "real") ctx.fail("variant", "scenario has complex data; variant 'real' not allowed");

  if (j.contains("horizon")) {
    const json& h = j["horizon"];
    if (!h.is_object() || h.size() != 1) ctx.fail("horizon", "'horizon' must be {\"t\": T} or {\"longTime\": T}");
    ctx.check_keys(h, {"t", "longTime"});
    c.long_time = h.contains("longTime");
    c.horizon = ctx.number(c.long_time ? h["longTime"] : h["t"], c.long_time ? "longTime" : "t");
    if (!(c.horizon > 0.0)) ctx.fail("horizon", "horizon must be positive");
  }

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_array()) ctx.fail("grid", "'grid' must be an array of integers");
    std::vector<std::size_t> n;
    for (const auto& e : g) {
      if (!e.is_number_integer() || e.get<long long>() < 4 || e.get<long long>() % 2 != 0) {
        ctx.fail("grid", "grid entries must be even integers >= 4");
      }
      n.push_back(e.get<std::size_t>());
    }
    const auto dim = static_cast<std::size_t>(sc.spec.grid.dim());
    if (n.size() != 1 && n.size() != dim) ctx.fail("grid", "grid needs 1 or " + std::to_string(dim) + " entries");
    c.grid = n;
  }

  if (j.contains("snapshots")) {
    const json& s = j["snapshots"];
    if (!s.is_array()) ctx.fail("snapshots", "'snapshots' must be an array of times");
    for (const auto& e : s) {
      const double t = ctx.number(e, "snapshots");
      if (t < 0.0 || t > c.end_time() * (1 + 1e-12)) ctx.fail("snapshots", "snapshot times must lie in [0, horizon]");
      c.snapshots.push_back(t);
    }
    std::sort(c.snapshots.begin(), c.snapshots.end());
  }

  if (j.contains("outputs")) {
    if (!j["outputs"].is_string() || j["outputs"].get<std::string>().empty()) {
      ctx.fail("outputs", "'outputs' must be a nonempty path");
    }
    c.outputs = j["outputs"].get<std::string>();
  }

  try {
    (void)c.steps();
  } catch (const ValidationError& e) {
    ctx.fail("tau", e.what());
  }
  return c;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config_text(text, path.string());
}

std::string config_to_json(const RunConfig& c) {
  json j;
  j["scenario"] = c.scenario;
  j["alpha"] = c.alpha;
  j["epsilon"] = c.epsilon;
  j["tau"] = c.tau;
  j["horizon"] = c.long_time ? json{{"longTime", c.horizon}} : json{{"t", c.horizon}};
  if (c.grid) {
    j["grid"] = *c.grid;
  } else {
    const GridSpec grid = make_scenario(c.scenario).spec.grid;
    j["grid"] = std::vector<std::size_t>(grid.shape().begin(), grid.shape().end());
  }
  j["variant"] = c.variant;
  j["p"] = c.p;
  j["snapshots"] = c.snapshots;
  j["outputs"] = c.outputs;
  j["taylorThreshold"] = c.taylor_threshold;
  return j.dump(2) + "\n";
}

}  // namespace fsg::io
