#include "fsg/io/vtk.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fsg/error.hpp"
#include "fsg/io/snapshot.hpp"

namespace fsg::io {

ExportQuantity parse_export_quantity(const std::string& name) {
  if (name == "u") return ExportQuantity::U;
  if (name == "sin(u/2)" || name == "sin-half-u") return ExportQuantity::SinHalfU;
  throw ValidationError("unknown export quantity '" + name + "' (use u or sin(u/2))");
}

std::string structured_points_text(const Field& f, ExportQuantity quantity, const std::string& title) {
  require_space(f, Space::Physical, "structured_points_text");
  const GridSpec& g = f.grid();
  const int d = g.dim();
  if (d > 3) throw ValidationError("structured-points export supports at most 3 dimensions");

  // Axis 0 is x and is written fastest; 2D grids get a unit third axis.
  auto axis_list = [&](auto value) {
    std::string s;
    for (int a = 0; a < 3; ++a) s += " " + value(a < d ? a : -1);
    return s;
  };
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };

  std::string out = "# vtk DataFile Version 3.0\n" + title + "\nASCII\nDATASET STRUCTURED_POINTS\n";
  out += "DIMENSIONS" + axis_list([&](int a) { return a < 0 ? std::string("1") : std::to_string(g.points(a)); }) + "\n";
  out += "ORIGIN" + axis_list([&](int a) { return a < 0 ? std::string("0") : num(g.interval(a).lo); }) + "\n";
  out += "SPACING" + axis_list([&](int a) { return a < 0 ? std::string("1") : num(g.spacing(a)); }) + "\n";
  out += "POINT_DATA " + std::to_string(g.size()) + "\n";
  out += std::string("SCALARS ") + (quantity == ExportQuantity::U ? "u" : "sin_half_u") + " double 1\n";
  out += "LOOKUP_TABLE default\n";
  const std::size_t n0 = g.points(0), n1 = g.points(1), n2 = d == 3 ? g.points(2) : 1;
  for (std::size_t k = 0; k < n2; ++k) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t i = 0; i < n0; ++i) {
        const double u = f[(i * n1 + j) * n2 + k].real();
        out += num(quantity == ExportQuantity::U ? u : std::sin(0.5 * u));
        out += '\n';
      }
    }
  }
  return out;
}

void export_structured_grid(const std::filesystem::path& snapshot, const std::filesystem::path& out,
                            ExportQuantity quantity) {
  const Snapshot snap = read_snapshot(snapshot);
  const std::string text =
      structured_points_text(snap.field, quantity, "field " + to_string(snap.meta.field) + " t=" +
                                                       std::to_string(snap.meta.time));
  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + out.string() + "' for writing");
  os << text;
  if (!os) throw IoError("write to '" + out.string() + "' failed");
}

}  // namespace fsg::io
