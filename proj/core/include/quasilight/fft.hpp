#pragma once

#include <complex>

namespace quasilight {

/// Thin FFTW wrapper. Plans are created under a global mutex (FFTW planning
/// is not thread-safe); execution on distinct buffers is safe, so each worker
/// owns its own transform object. inverse() includes the 1/n normalization.
class Fft1d {
public:
  explicit Fft1d(int n);
  ~Fft1d();
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;
  int size() const { return n_; }

private:
  int n_;
  void* forward_plan_;
  void* inverse_plan_;
};

/// Row-major layout: index = iy*nx + ix.
class Fft2d {
public:
  Fft2d(int nx, int ny);
  ~Fft2d();
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

private:
  int nx_;
  int ny_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace quasilight
