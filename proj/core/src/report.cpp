#include "fsg/report.hpp"

#include <algorithm>
#include <cmath>

#include "fsg/error.hpp"

namespace fsg {

std::optional<double> observed_order(double e_coarse, double e_fine, double ratio) {
  if (!(ratio > 1.0) || !std::isfinite(ratio)) throw ValidationError("observed_order: ratio must exceed 1");
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !std::isfinite(e_coarse) || !std::isfinite(e_fine)) {
    return std::nullopt;
  }
  return std::log(e_coarse / e_fine) / std::log(ratio);
}

double ConvergenceReport::ladder_ratio(std::size_t c) const {
  const double a = columns.at(c - 1), b = columns.at(c);
  return std::max(a, b) / std::min(a, b);
}

void ConvergenceReport::resize() {
  cells.resize(rows.size());
  for (auto& r : cells) r.resize(columns.size());
  orders.assign(rows.size(), std::vector<std::optional<double>>(columns.size()));
  row_labels.resize(rows.size());
  column_labels.resize(columns.size());
  row_flags.resize(rows.size());
}

void ConvergenceReport::compute_orders() {
  orders.assign(rows.size(), std::vector<std::optional<double>>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 1; c < columns.size(); ++c) {
      const auto& a = cells[r][c - 1].error;
      const auto& b = cells[r][c].error;
      if (a && b) orders[r][c] = observed_order(*a, *b, ladder_ratio(c));
    }
  }
}

void ConvergenceReport::compute_row_ratios() {
  row_ratios.assign(rows.empty() ? 0 : rows.size() - 1, std::vector<std::optional<double>>(columns.size()));
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& a = cells[r][c].error;
      const auto& b = cells[r + 1][c].error;
      if (a && b && *b > 0.0) row_ratios[r][c] = *a / *b;
    }
  }
}

}  // namespace fsg
