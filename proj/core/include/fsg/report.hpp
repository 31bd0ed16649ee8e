#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsg/observables.hpp"

namespace fsg {

/// log(e_coarse / e_fine) / log(ratio); nullopt when either error is not
/// positive and finite (printed as "-").
std::optional<double> observed_order(double e_coarse, double e_fine, double ratio);

struct ReportCell {
  std::optional<double> error;  ///< nullopt: cell failed
  std::string failure;
  bool marked = false;
};

/// Row axis x column (ladder) axis matrix of errors and observed orders.
struct ConvergenceReport {
  std::string title;
  std::string row_axis = "epsilon";
  std::string column_axis = "tau";
  std::vector<double> rows;
  std::vector<std::string> row_labels;
  std::vector<double> columns;
  std::vector<std::string> column_labels;
  std::vector<std::vector<ReportCell>> cells;
  std::vector<std::vector<std::optional<double>>> orders;
  /// error(row r) / error(row r+1) per column, filled for epsilon-halving rows.
  std::vector<std::vector<std::optional<double>>> row_ratios;
  std::vector<std::string> row_flags;
  std::vector<std::vector<EnergySample>> energy_series;  ///< per column, energy sweeps only
  std::map<std::string, std::string> metadata;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }
  /// Ladder ratio between columns c-1 and c (larger over smaller).
  double ladder_ratio(std::size_t c) const;
  void resize();
  void compute_orders();
  void compute_row_ratios();
  std::optional<double> error(std::size_t r, std::size_t c) const { return cells.at(r).at(c).error; }
  std::optional<double> order(std::size_t r, std::size_t c) const { return orders.at(r).at(c); }
};

}  // namespace fsg
