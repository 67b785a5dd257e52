#pragma once

// Counter-based deterministic random source.  Every draw is a pure hash of
// (seed, stream, counter), so sample k of stream s is the same value no
// matter what was drawn before it; experiment sweeps key their substreams
// off the sample index and stay reproducible under any execution order.

#include <cstdint>
#include <vector>

#include "radlab/common.hpp"

namespace radlab {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed) ^ (0x9e3779b97f4a7c15ULL + stream))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller; consumes two uniforms per call, no caching so the draw
  // count per sample is fixed.
  double normal() {
    const double u = 1.0 - uniform01();  // (0, 1]
    const double t = kTwoPi * uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(t);
  }

  cplx normal_c() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  cplx unit_phase() { return std::polar(1.0, uniform(-kPi, kPi)); }

  // Uniform point on S^{n-1} via normalized gaussians.
  std::vector<double> sphere_point(int n) {
    std::vector<double> x(n);
    double s2 = 0.0;
    do {
      s2 = 0.0;
      for (int i = 0; i < n; ++i) {
        x[i] = normal();
        s2 += x[i] * x[i];
      }
    } while (s2 < 1e-30);
    const double inv = 1.0 / std::sqrt(s2);
    for (double& v : x) v *= inv;
    return x;
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace radlab
