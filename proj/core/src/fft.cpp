#include "quasilight/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace quasilight {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan make_plan_1d(int n, int sign) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  // FFTW_UNALIGNED lets the plan run on any caller buffer later.
  return fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

fftw_plan make_plan_2d(int nx, int ny, int sign) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(nx) * ny);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  return fftw_plan_dft_2d(ny, nx, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

void destroy(void* plan) {
  if (plan == nullptr) return;
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan));
}

void run(const void* plan, std::complex<double>* data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(const_cast<void*>(plan)), buf, buf);
}

void scale(std::complex<double>* data, std::size_t n, double factor) {
  for (std::size_t i = 0; i < n; ++i) data[i] *= factor;
}

}  // namespace

Fft1d::Fft1d(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Fft1d: n must be positive");
  forward_plan_ = make_plan_1d(n, FFTW_FORWARD);
  inverse_plan_ = make_plan_1d(n, FFTW_BACKWARD);
}

Fft1d::~Fft1d() {
  destroy(forward_plan_);
  destroy(inverse_plan_);
}

void Fft1d::forward(std::complex<double>* data) const { run(forward_plan_, data); }

void Fft1d::inverse(std::complex<double>* data) const {
  run(inverse_plan_, data);
  scale(data, static_cast<std::size_t>(n_), 1.0 / n_);
}

Fft2d::Fft2d(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("Fft2d: sizes must be positive");
  forward_plan_ = make_plan_2d(nx, ny, FFTW_FORWARD);
  inverse_plan_ = make_plan_2d(nx, ny, FFTW_BACKWARD);
}

Fft2d::~Fft2d() {
  destroy(forward_plan_);
  destroy(inverse_plan_);
}

void Fft2d::forward(std::complex<double>* data) const { run(forward_plan_, data); }

void Fft2d::inverse(std::complex<double>* data) const {
  run(inverse_plan_, data);
  const std::size_t n = static_cast<std::size_t>(nx_) * ny_;
  scale(data, n, 1.0 / static_cast<double>(n));
}

}  // namespace quasilight
