#pragma once

#include "npw/linalg.hpp"

#include <cstdint>

namespace npw {

/// Seedable generator for property trials. splitmix64 with an explicit
/// bits-to-double mapping, so identical seeds give identical draws on any
/// platform (std:: distributions are implementation-defined).
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  RealVector vector(int len, double lo, double hi) {
    RealVector v(len);
    for (int i = 0; i < len; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  /// Vector scaled down to norm <= max_norm (unchanged if already inside).
  RealVector vector_in_ball(int len, double max_norm) {
    RealVector v = vector(len, -1.0, 1.0);
    const double norm = v.norm();
    if (norm > max_norm && norm > 0.0) v *= max_norm / norm;
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace npw
