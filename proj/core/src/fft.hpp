#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fsg::detail {

/// Owns a pair of in-place FFTW plans for one shape. Plans are created with
/// FFTW_ESTIMATE (deterministic) and FFTW_UNALIGNED so they can execute on any
/// std::complex<double> buffer via the new-array interface.
class FftPlans {
 public:
  explicit FftPlans(std::vector<std::size_t> shape);
  ~FftPlans();
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  void forward(std::span<std::complex<double>> data) const;
  void backward(std::span<std::complex<double>> data) const;

 private:
  std::vector<std::size_t> shape_;
  std::size_t size_ = 1;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

/// Process-wide cache; planning is serialized, execution is reentrant.
std::shared_ptr<const FftPlans> plans_for(std::span<const std::size_t> shape);

}  // namespace fsg::detail
