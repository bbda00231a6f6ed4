#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "lmcf/curve.hpp"

namespace lmcf::testing {

inline constexpr double pi = std::numbers::pi;
inline const std::complex<double> I{0, 1};

// straight segment from a to b with `count` nodes
inline PlanarCurve segment(std::complex<double> a, std::complex<double> b, Eigen::Index count) {
  return sample<double>([&](double t) { return a + t * (b - a); }, 0.0, 1.0, count, Topology::open_arc);
}

inline PlanarCurve ray(double arg, double r0, double r1, Eigen::Index count) {
  return segment(std::polar(r0, arg), std::polar(r1, arg), count);
}

// smooth star-shaped loop r(t) = 2 + small random Fourier tail, never near the origin
inline PlanarCurve random_loop(std::uint64_t seed, Eigen::Index count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.15, 0.15);
  double a[4], b[4];
  for (int j = 0; j < 4; ++j) a[j] = u(rng), b[j] = u(rng);
  return sample<double>(
      [&](double t) {
        double r = 2;
        for (int j = 0; j < 4; ++j) r += a[j] * std::cos((j + 2) * t) + b[j] * std::sin((j + 2) * t);
        return std::polar(r, t);
      },
      0.0, 2 * pi, count, Topology::closed_loop);
}

}  // namespace lmcf::testing
