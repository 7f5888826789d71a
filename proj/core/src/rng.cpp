#include "quasilight/rng.hpp"

#include <cmath>
#include <numbers>

namespace quasilight {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

GaussianStream::GaussianStream(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t state = master_seed;
  (void)splitmix64(state);
  state ^= 0xA3EC647659359ACDULL * (stream_index + 1);
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state) >> 32),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state) >> 32)};
  engine_.seed(seq);
}

double GaussianStream::uniform_open() {
  // 53-bit mantissa in (0, 1]
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

std::complex<double> GaussianStream::complex_normal(double variance) {
  const double sigma = std::sqrt(0.5 * variance);
  const double re = normal();
  const double im = normal();
  return {sigma * re, sigma * im};
}

}  // namespace quasilight
