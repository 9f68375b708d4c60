#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "harmodisk/boundary_data.hpp"
#include "harmodisk/corpus.hpp"
#include "harmodisk/fourier.hpp"
#include "harmodisk/geometry.hpp"
#include "harmodisk/harmonic.hpp"

namespace harmodisk::support {

inline std::mt19937_64 rng(unsigned long long seed = 20240607ULL) {
  return std::mt19937_64(seed);
}

// Uniform in area over the closed disk of radius `radius`.
inline CartesianPoint random_in_disk(std::mt19937_64& gen, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(gen));
  const double t = -pi + 2.0 * pi * u(gen);
  return {r * std::cos(t), r * std::sin(t)};
}

inline std::vector<CartesianPoint> random_points(std::size_t count, double radius,
                                                 unsigned long long seed = 7) {
  auto gen = rng(seed);
  std::vector<CartesianPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_in_disk(gen, radius));
  return out;
}

inline HarmonicApproximant approximant(const std::string& name, std::size_t n,
                                       double radius = 1.0, std::size_t nodes = 0) {
  const BoundaryData b = corpus_entry(name, radius).data;
  return HarmonicApproximant(
      compute_spectrum(b, n, nodes == 0 ? default_quadrature_nodes(n) : nodes));
}

}  // namespace harmodisk::support
