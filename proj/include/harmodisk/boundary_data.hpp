#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "harmodisk/geometry.hpp"

namespace harmodisk {

// Caller-declared regularity: f^{(k)} is alpha-Hölder on [-pi, pi].
// `seminorm`, when present, is [f^{(k)}]_{C^alpha}.
struct Smoothness {
  int k = 0;
  double alpha = 1.0;
  std::optional<double> seminorm;
};

struct ClosedFormSource {
  std::string name;
};

// Values at theta_j = -pi + 2*pi*j/M, j = 0..M-1.
struct SampledSource {
  std::vector<double> values;
};

using BoundarySource = std::variant<ClosedFormSource, SampledSource>;

// Boundary data g on dB_R together with its angular pullback
// f(theta) = g(R cos theta, R sin theta). Immutable once built.
class BoundaryData {
public:
  using AngularFunction = std::function<double(double)>;

  // Closed-form data; `f` is the pullback, not g.
  BoundaryData(DiskGeometry geometry, AngularFunction f, std::string name,
               std::optional<Smoothness> smoothness = std::nullopt);

  // Uniform angular samples (M >= 4); f interpolates linearly and periodically.
  BoundaryData(DiskGeometry geometry, std::vector<double> samples,
               std::optional<Smoothness> smoothness = std::nullopt);

  const DiskGeometry& geometry() const noexcept { return geometry_; }
  double radius() const noexcept { return geometry_.radius(); }
  const BoundarySource& source() const noexcept { return source_; }
  const std::optional<Smoothness>& smoothness() const noexcept { return smoothness_; }

  // Marks data known to violate continuity (jumps); bound reports built
  // from it are inapplicable.
  BoundaryData with_discontinuity() const;
  BoundaryData with_smoothness(std::optional<Smoothness> s) const;
  bool known_discontinuous() const noexcept { return discontinuous_; }

  double f(double theta) const { return f_(theta); }

  // g at a point of the plane, through the polar angle of (x, y). Only
  // meaningful on dB_R; the angle is taken with atan2, so (-R, 0) maps to pi.
  double g(double x, double y) const;

  // f at theta_j = -pi + 2*pi*j/M for j = 0..M-1. Sampled data with exactly
  // M samples returns the samples themselves.
  std::vector<double> node_values(std::size_t nodes) const;

  // f(-pi) == f(pi) up to `tolerance` (relative to max(1, |f(pi)|)).
  // Sampled data is periodic by construction.
  bool is_periodic(double tolerance = 1e-9) const;

private:
  DiskGeometry geometry_;
  AngularFunction f_;
  BoundarySource source_;
  std::optional<Smoothness> smoothness_;
  bool discontinuous_ = false;
};

// Angle of the j-th node of a uniform M-point grid on [-pi, pi).
inline double uniform_node(std::size_t j, std::size_t nodes) {
  return -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(nodes);
}

// Builds BoundaryData from g(x, y) on dB_R. Probes g at 64 angles and throws
// ErrorKind::invalid_boundary_data on a non-finite value.
BoundaryData pullback(std::function<double(double, double)> g, DiskGeometry geometry,
                      std::string name = "g",
                      std::optional<Smoothness> smoothness = std::nullopt);

// Resamples strictly increasing (theta, value) pairs in [-pi, pi) onto a
// uniform grid of the same length by periodic linear interpolation. Already
// uniform input is taken verbatim.
BoundaryData from_samples(DiskGeometry geometry, const std::vector<double>& theta,
                          const std::vector<double>& values,
                          std::optional<Smoothness> smoothness = std::nullopt);

// Parses the `theta,value` CSV format.
BoundaryData read_boundary_csv(std::istream& in, DiskGeometry geometry,
                               std::optional<Smoothness> smoothness = std::nullopt);

// Lower estimate of [f]_{C^alpha([-pi, pi])}: the largest difference quotient
// over pairs of a uniform grid with `grid_size` cells at every dyadic index
// separation. Doubling grid_size never decreases the result.
double holder_seminorm_estimate(const BoundaryData& b, double alpha,
                                std::size_t grid_size = 2048);

// Same probe pairs, measured on dB_R with chordal distance: an estimate of
// [g]_{C^alpha(dB_R)}.
double boundary_holder_seminorm_estimate(const BoundaryData& b, double alpha,
                                         std::size_t grid_size = 2048);

}  // namespace harmodisk
