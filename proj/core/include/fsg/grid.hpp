#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fsg {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Periodic rectangular tensor grid on prod_i (lo_i, hi_i) with N_i nodes per
/// dimension. Node p of dimension i sits at lo_i + p * h_i; index N_i wraps to 0.
class GridSpec {
 public:
  GridSpec() = default;
  /// Throws ValidationError unless dim is 2 or 3, every N_i is even and >= 4,
  /// and every interval is non-degenerate.
  GridSpec(std::vector<Interval> intervals, std::vector<std::size_t> points);

  static GridSpec cube(int dim, Interval interval, std::size_t points);

  int dim() const { return static_cast<int>(points_.size()); }
  const Interval& interval(int i) const { return intervals_[i]; }
  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t points(int i) const { return points_[i]; }
  std::span<const std::size_t> shape() const { return points_; }
  double spacing(int i) const { return intervals_[i].length() / static_cast<double>(points_[i]); }
  double node(int i, std::size_t p) const { return intervals_[i].lo + static_cast<double>(p) * spacing(i); }

  /// Total sample count prod_i N_i.
  std::size_t size() const { return size_; }
  /// prod_i h_i, the weight of one node in trapezoidal sums.
  double cell_volume() const;
  /// prod_i (hi_i - lo_i).
  double volume() const;

  bool same_domain(const GridSpec& other) const { return intervals_ == other.intervals_; }
  GridSpec with_points(std::vector<std::size_t> points) const { return GridSpec(intervals_, std::move(points)); }

  /// Row-major strides: the last dimension varies fastest.
  std::size_t stride(int i) const;

  std::string describe() const;

  bool operator==(const GridSpec& other) const {
    return intervals_ == other.intervals_ && points_ == other.points_;
  }

 private:
  std::vector<Interval> intervals_;
  std::vector<std::size_t> points_;
  std::size_t size_ = 0;
};

/// Maps a storage bin to its frequency index in T_N = {-N/2, ..., N/2-1}:
/// bins 0..N/2-1 carry k = 0..N/2-1, bins N/2..N-1 carry k = -N/2..-1.
inline long frequency_of_bin(std::size_t bin, std::size_t n) {
  return bin < n / 2 ? static_cast<long>(bin) : static_cast<long>(bin) - static_cast<long>(n);
}

/// Inverse of frequency_of_bin for k in T_N.
inline std::size_t bin_of_frequency(long k, std::size_t n) {
  return k >= 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k + static_cast<long>(n));
}

/// Bin holding frequency -k (mod N). The Nyquist bin maps to itself.
inline std::size_t negated_bin(std::size_t bin, std::size_t n) { return (n - bin) % n; }

}  // namespace fsg
