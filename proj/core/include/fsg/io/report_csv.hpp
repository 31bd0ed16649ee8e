#pragma once

#include <filesystem>
#include <string>

#include "fsg/report.hpp"

namespace fsg::io {

/// Header: <row_axis>, then "e(<label>)","order(<label>)" per ladder rung.
/// Errors "%.4e", orders "%.4f"; failed cells "FAIL", undefined orders "-".
std::string report_csv(const ConvergenceReport& report);
/// Provenance sidecar: metadata, axes, marked cells, failures, row ratios and flags.
std::string report_meta_json(const ConvergenceReport& report);

/// Writes <path> and <path stem>.meta.json next to it. Energy series, if any,
/// go to <path stem>.energy-<j>.csv with columns step,time,energy,drift.
void write_report_csv(const ConvergenceReport& report, const std::filesystem::path& path);

}  // namespace fsg::io
