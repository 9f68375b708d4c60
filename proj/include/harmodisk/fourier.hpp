#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "harmodisk/boundary_data.hpp"

namespace harmodisk {

// Scaled Fourier coefficients of the boundary pullback.
//
// a[k] = (1/pi) int f cos(k theta) for k = 0..n_max and b[k-1] =
// (1/pi) int f sin(k theta) for k = 1..n_max, i.e. the disk-solution
// coefficients c_k, d_k multiplied by R^k. Keeping R^k folded in avoids
// overflow of R^{-k} at large k.
struct FourierSpectrum {
  double radius = 1.0;
  std::size_t n_max = 0;
  std::size_t quadrature_nodes = 0;
  std::vector<double> a;  // size n_max + 1
  std::vector<double> b;  // size n_max, b[0] is the k = 1 sine coefficient

  double sine(std::size_t k) const { return k == 0 ? 0.0 : b[k - 1]; }

  // Sum of |a_k| + |b_k|; the magnitude used to scale tolerances.
  double coefficient_scale() const;

  // Keeps harmonics 0..n (n <= n_max).
  FourierSpectrum truncated(std::size_t n) const;
};

// max(4096, 8 n_max).
std::size_t default_quadrature_nodes(std::size_t n_max);

// Periodic trapezoidal rule on `nodes` uniform nodes. Requires
// nodes >= 2 n_max + 2 (ErrorKind::aliasing otherwise) and finite f at
// every node (ErrorKind::invalid_boundary_data).
FourierSpectrum compute_spectrum(const BoundaryData& b, std::size_t n_max,
                                 std::size_t nodes);

struct L1Norm {
  double theta_integral = 0.0;     // int_{-pi}^{pi} |f| dtheta
  double boundary_integral = 0.0;  // int_{dB_R} |g| ds = R * theta_integral
  double mean_abs = 0.0;           // theta_integral / (2 pi)
  std::size_t nodes = 0;
};

// Trapezoidal estimate of the L1 boundary norm (nodes >= 4).
L1Norm l1_boundary_norm(const BoundaryData& b, std::size_t nodes);

nlohmann::ordered_json to_json(const FourierSpectrum& s);
FourierSpectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace harmodisk
