#include "fsg/io/report_csv.hpp"

#include <cstdio>
#include <fstream>

#include "fsg/error.hpp"
#include "json.hpp"

namespace fsg::io {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

nlohmann::json optional_matrix(const std::vector<std::vector<std::optional<double>>>& m) {
  auto out = nlohmann::json::array();
  for (const auto& row : m) {
    auto r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::string report_csv(const ConvergenceReport& r) {
  std::string out = r.row_axis;
  for (std::size_t c = 0; c < r.column_count(); ++c) {
    const std::string& label = r.column_labels.at(c);
    out += ",e(" + label + "),order(" + label + ")";
  }
  out += "\n";
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    out += r.row_labels.at(i);
    for (std::size_t c = 0; c < r.column_count(); ++c) {
      const auto& cell = r.cells.at(i).at(c);
      out += ",";
      out += cell.error ? fmt("%.4e", *cell.error) : "FAIL";
      out += ",";
      const auto& o = r.orders.at(i).at(c);
      out += o ? fmt("%.4f", *o) : "-";
    }
    out += "\n";
  }
  return out;
}

std::string report_meta_json(const ConvergenceReport& r) {
  using nlohmann::json;
  json j;
  j["title"] = r.title;
  j["rowAxis"] = r.row_axis;
  j["columnAxis"] = r.column_axis;
  j["rows"] = r.rows;
  j["rowLabels"] = r.row_labels;
  j["columns"] = r.columns;
  j["columnLabels"] = r.column_labels;
  json marked = json::array(), failures = json::array();
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    for (std::size_t c = 0; c < r.cells[i].size(); ++c) {
      if (r.cells[i][c].marked) marked.push_back({i, c});
      if (!r.cells[i][c].error) failures.push_back({{"row", i}, {"column", c}, {"reason", r.cells[i][c].failure}});
    }
  }
  j["marked"] = marked;
  j["failures"] = failures;
  j["orders"] = optional_matrix(r.orders);
  if (!r.row_ratios.empty()) j["rowRatios"] = optional_matrix(r.row_ratios);
  j["rowFlags"] = r.row_flags;
  j["metadata"] = r.metadata;
  return j.dump(2) + "\n";
}

void write_report_csv(const ConvergenceReport& r, const std::filesystem::path& path) {
  write_text(path, report_csv(r));
  const auto dir = path.parent_path();
  const std::string stem = path.stem().string();
  write_text(dir / (stem + ".meta.json"), report_meta_json(r));
  for (std::size_t c = 0; c < r.energy_series.size(); ++c) {
    std::string text = "step,time,energy,drift\n";
    for (const auto& s : r.energy_series[c]) {
      text += std::to_string(s.step) + "," + fmt("%.17g", s.time) + "," + fmt("%.17g", s.value) + "," +
              fmt("%.17g", s.drift) + "\n";
    }
    write_text(dir / (stem + ".energy-" + std::to_string(c) + ".csv"), text);
  }
}

}  // namespace fsg::io
