#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace incid4 {

// mt19937_64 output is fixed by the standard; the distributions below are
// written out so that streams are identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform integer on [-range, range].
  std::int64_t symmetric(std::int64_t range) {
    return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(2 * range + 1))) - range;
  }

  /// Uniform double on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = unit();
    while (u1 == 0.0) u1 = unit();
    double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace incid4
