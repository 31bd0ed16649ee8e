#include "fsg/io/snapshot.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "fsg/error.hpp"
#include "json.hpp"

namespace fsg::io {

namespace {

using nlohmann::json;

void put_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32_le(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

void put_f64_le(std::string& out, double d) {
  const auto bits = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

double get_f64_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

json header_json(const SnapshotMeta& m) {
  json h;
  h["version"] = m.version;
  h["dim"] = m.grid.dim();
  json n = json::array(), a = json::array(), b = json::array();
  for (int i = 0; i < m.grid.dim(); ++i) {
    n.push_back(m.grid.points(i));
    a.push_back(m.grid.interval(i).lo);
    b.push_back(m.grid.interval(i).hi);
  }
  h["N"] = n;
  h["a"] = a;
  h["b"] = b;
  h["alpha"] = m.alpha;
  h["epsilon"] = m.epsilon;
  h["time"] = m.time;
  h["field"] = to_string(m.field);
  h["layout"] = "row-major";
  return h;
}

}  // namespace

std::string to_string(SnapshotField f) {
  switch (f) {
    case SnapshotField::U: return "u";
    case SnapshotField::V: return "v";
    case SnapshotField::PhiRe: return "phi_re";
    case SnapshotField::PhiIm: return "phi_im";
    case SnapshotField::UIm: return "u_im";
    case SnapshotField::VIm: return "v_im";
  }
  return "u";
}

SnapshotField parse_snapshot_field(const std::string& name) {
  for (auto f : {SnapshotField::U, SnapshotField::V, SnapshotField::PhiRe, SnapshotField::PhiIm, SnapshotField::UIm,
                 SnapshotField::VIm}) {
    if (to_string(f) == name) return f;
  }
  throw IoError("snapshot: unknown field tag '" + name + "'");
}

void write_snapshot(const std::filesystem::path& path, std::span<const double> samples, const SnapshotMeta& meta) {
  if (samples.size() != meta.grid.size()) {
    throw ValidationError("write_snapshot: sample count does not match the grid");
  }
  const std::string header = header_json(meta).dump();
  std::string blob;
  blob.reserve(12 + header.size() + 8 * samples.size());
  blob.append(kSnapshotMagic, sizeof(kSnapshotMagic));
  put_u32_le(blob, static_cast<std::uint32_t>(header.size()));
  blob += header;
  for (double d : samples) put_f64_le(blob, d);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("write_snapshot: cannot open '" + path.string() + "' for writing");
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out) throw IoError("write_snapshot: write to '" + path.string() + "' failed");
}

void write_snapshot(const std::filesystem::path& path, const Field& field, const SnapshotMeta& meta) {
  require_space(field, Space::Physical, "write_snapshot");
  const bool imag = meta.field == SnapshotField::PhiIm || meta.field == SnapshotField::UIm ||
                    meta.field == SnapshotField::VIm;
  std::vector<double> samples(field.size());
  for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = imag ? field[j].imag() : field[j].real();
  SnapshotMeta m = meta;
  m.grid = field.grid();
  write_snapshot(path, samples, m);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_snapshot: cannot open '" + path.string() + "'");
  const std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* bytes = reinterpret_cast<const unsigned char*>(blob.data());

  if (blob.size() < 12) {
    throw IoError("read_snapshot: file is " + std::to_string(blob.size()) + " bytes, shorter than the 12-byte preamble");
  }
  if (std::memcmp(blob.data(), kSnapshotMagic, 8) != 0) {
    throw IoError("read_snapshot: bad magic at offset 0 (expected FRSG0001)");
  }
  const std::uint32_t header_len = get_u32_le(bytes + 8);
  if (blob.size() < 12ull + header_len) {
    throw IoError("read_snapshot: header of " + std::to_string(header_len) + " bytes at offset 12 runs past end of file");
  }

  json h;
  try {
    h = json::parse(blob.begin() + 12, blob.begin() + 12 + header_len);
  } catch (const json::exception& e) {
    throw IoError(std::string("read_snapshot: malformed header at offset 12: ") + e.what());
  }

  Snapshot snap;
  try {
    const int dim = h.at("dim").get<int>();
    const auto n = h.at("N").get<std::vector<std::size_t>>();
    const auto a = h.at("a").get<std::vector<double>>();
    const auto b = h.at("b").get<std::vector<double>>();
    if (dim < 2 || dim > 3) throw IoError("read_snapshot: dimension " + std::to_string(dim) + " not supported");
    if (n.size() != static_cast<std::size_t>(dim) || a.size() != n.size() || b.size() != n.size()) {
      throw IoError("read_snapshot: header arrays do not match dim");
    }
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < n.size(); ++i) iv.push_back({a[i], b[i]});
    snap.meta.grid = GridSpec(iv, n);
    snap.meta.version = h.at("version").get<int>();
    snap.meta.alpha = h.at("alpha").get<double>();
    snap.meta.epsilon = h.at("epsilon").get<double>();
    snap.meta.time = h.at("time").get<double>();
    snap.meta.field = parse_snapshot_field(h.at("field").get<std::string>());
    if (h.value("layout", std::string("row-major")) != "row-major") throw IoError("read_snapshot: unsupported layout");
  } catch (const json::exception& e) {
    throw IoError(std::string("read_snapshot: incomplete header: ") + e.what());
  } catch (const ValidationError& e) {
    throw IoError(std::string("read_snapshot: invalid grid in header: ") + e.what());
  }

  const std::size_t offset = 12 + header_len;
  const std::size_t expected = 8 * snap.meta.grid.size();
  const std::size_t actual = blob.size() - offset;
  if (actual != expected) {
    throw IoError("read_snapshot: payload at offset " + std::to_string(offset) + " has " + std::to_string(actual) +
                  " bytes, expected " + std::to_string(expected));
  }
  std::vector<Complex> values(snap.meta.grid.size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = get_f64_le(bytes + offset + 8 * j);
  snap.field = Field(snap.meta.grid, Space::Physical, std::move(values));
  return snap;
}

std::vector<std::string> snapshot_warnings(const SnapshotMeta& meta, std::optional<double> alpha,
                                           std::optional<double> epsilon) {
  std::vector<std::string> out;
  if (alpha && *alpha != meta.alpha) {
    out.push_back("snapshot alpha " + std::to_string(meta.alpha) + " differs from requested " + std::to_string(*alpha));
  }
  if (epsilon && *epsilon != meta.epsilon) {
    out.push_back("snapshot epsilon " + std::to_string(meta.epsilon) + " differs from requested " +
                  std::to_string(*epsilon));
  }
  if (meta.version != kSnapshotVersion) {
    out.push_back("snapshot version " + std::to_string(meta.version) + " is newer than this reader");
  }
  return out;
}

}  // namespace fsg::io
