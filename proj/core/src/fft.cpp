#include "fft.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fsg::detail {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

FftPlans::FftPlans(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::vector<int> n(shape_.begin(), shape_.end());
  for (auto s : shape_) size_ *= s;
  auto* scratch = fftw_alloc_complex(size_);
  if (scratch == nullptr) throw std::bad_alloc();
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  {
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch, scratch, FFTW_FORWARD, flags);
    backward_ = fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch, scratch, FFTW_BACKWARD, flags);
  }
  fftw_free(scratch);
  if (forward_ == nullptr || backward_ == nullptr) throw std::runtime_error("fftw: planning failed");
}

FftPlans::~FftPlans() {
  std::lock_guard lock(planner_mutex());
  if (forward_) fftw_destroy_plan(forward_);
  if (backward_) fftw_destroy_plan(backward_);
}

void FftPlans::forward(std::span<std::complex<double>> data) const {
  if (data.size() != size_) throw std::invalid_argument("fft: buffer size does not match plan");
  fftw_execute_dft(forward_, as_fftw(data.data()), as_fftw(data.data()));
}

void FftPlans::backward(std::span<std::complex<double>> data) const {
  if (data.size() != size_) throw std::invalid_argument("fft: buffer size does not match plan");
  fftw_execute_dft(backward_, as_fftw(data.data()), as_fftw(data.data()));
}

std::shared_ptr<const FftPlans> plans_for(std::span<const std::size_t> shape) {
  // The planner mutex must outlive the cache, whose plans lock it on destruction.
  planner_mutex();
  static std::mutex cache_mutex;
  static std::map<std::vector<std::size_t>, std::shared_ptr<const FftPlans>> cache;
  std::vector<std::size_t> key(shape.begin(), shape.end());
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto plans = std::make_shared<const FftPlans>(key);
  cache.emplace(std::move(key), plans);
  return plans;
}

}  // namespace fsg::detail
