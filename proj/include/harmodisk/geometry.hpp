#pragma once

#include <cmath>
#include <numbers>

namespace harmodisk {

inline constexpr double pi = std::numbers::pi;

// Radius of the disk B_R centred at the origin.
class DiskGeometry {
public:
  explicit DiskGeometry(double radius);

  double radius() const noexcept { return radius_; }

private:
  double radius_;
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;

  double norm() const noexcept { return std::hypot(x, y); }
};

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

CartesianPoint to_cartesian(const PolarPoint& p) noexcept;

// Polar angle on the plane minus the half-line S = {x <= 0, y = 0}.
//
// Uses the three-branch arctangent definition (arctan(y/x) for x > 0, and
// -arctan(x/y) +/- pi/2 for x <= 0). Points within distance 1e-12 of S,
// the origin included, raise ErrorKind::branch_cut.
double theta_of(const CartesianPoint& p);

// Polar form of a point off the branch cut; throws like theta_of.
PolarPoint to_polar(const CartesianPoint& p);

}  // namespace harmodisk
