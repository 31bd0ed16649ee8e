#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsg/field.hpp"
#include "fsg/grid.hpp"

namespace fsg::io {

/// Binary field snapshot ("FRSG0001"):
///   bytes 0..7   magic "FRSG0001"
///   bytes 8..11  header length L, unsigned 32-bit little-endian
///   next L bytes UTF-8 JSON header {version, dim, N[], a[], b[], alpha, epsilon,
///                time, field, layout:"row-major"}
///   remainder    prod(N) binary64 little-endian samples, row-major
inline constexpr char kSnapshotMagic[8] = {'F', 'R', 'S', 'G', '0', '0', '0', '1'};
inline constexpr int kSnapshotVersion = 1;

/// Field tags. u_im / v_im carry imaginary parts of complex-variant runs.
enum class SnapshotField { U, V, PhiRe, PhiIm, UIm, VIm };

std::string to_string(SnapshotField f);
SnapshotField parse_snapshot_field(const std::string& name);

struct SnapshotMeta {
  GridSpec grid;
  double alpha = 2.0;
  double epsilon = 1.0;
  double time = 0.0;
  SnapshotField field = SnapshotField::U;
  int version = kSnapshotVersion;
};

struct Snapshot {
  Field field;  ///< physical space, real-valued
  SnapshotMeta meta;
};

/// Writes the samples verbatim. Throws IoError on failure.
void write_snapshot(const std::filesystem::path& path, std::span<const double> samples, const SnapshotMeta& meta);
/// Writes the real part (or, for PhiIm/UIm/VIm, the imaginary part) of a physical field.
void write_snapshot(const std::filesystem::path& path, const Field& field, const SnapshotMeta& meta);

/// Throws IoError on a missing file, wrong magic, malformed header, or a
/// payload whose length differs from 8 * prod(N).
Snapshot read_snapshot(const std::filesystem::path& path);

/// Metadata is advisory on read: mismatches produce warnings, never errors.
std::vector<std::string> snapshot_warnings(const SnapshotMeta& meta, std::optional<double> alpha,
                                           std::optional<double> epsilon);

}  // namespace fsg::io
