#include "fsg/grid.hpp"

#include <cmath>
#include <sstream>

#include "fsg/error.hpp"

namespace fsg {

GridSpec::GridSpec(std::vector<Interval> intervals, std::vector<std::size_t> points)
    : intervals_(std::move(intervals)), points_(std::move(points)) {
  if (intervals_.size() != points_.size()) {
    throw ValidationError("grid: interval count and point count differ");
  }
  if (points_.size() != 2 && points_.size() != 3) {
    throw ValidationError("grid: dimension must be 2 or 3, got " + std::to_string(points_.size()));
  }
  size_ = 1;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto n = points_[i];
    if (n < 4 || n % 2 != 0) {
      throw ValidationError("grid: N" + std::to_string(i) + " must be even and >= 4, got " + std::to_string(n));
    }
    const auto& iv = intervals_[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.hi > iv.lo)) {
      throw ValidationError("grid: interval " + std::to_string(i) + " must satisfy lo < hi");
    }
    size_ *= n;
  }
}

GridSpec GridSpec::cube(int dim, Interval interval, std::size_t points) {
  return GridSpec(std::vector<Interval>(static_cast<std::size_t>(dim), interval),
                  std::vector<std::size_t>(static_cast<std::size_t>(dim), points));
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= spacing(i);
  return v;
}

double GridSpec::volume() const {
  double v = 1.0;
  for (const auto& iv : intervals_) v *= iv.length();
  return v;
}

std::size_t GridSpec::stride(int i) const {
  std::size_t s = 1;
  for (int j = dim() - 1; j > i; --j) s *= points_[j];
  return s;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    if (i) os << " x ";
    os << "(" << intervals_[i].lo << "," << intervals_[i].hi << ")[" << points_[i] << "]";
  }
  return os.str();
}

}  // namespace fsg
