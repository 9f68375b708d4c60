#include "harmodisk/geometry.hpp"

#include <cmath>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_boundary_data: return "invalid-boundary-data";
    case ErrorKind::branch_cut: return "branch-cut";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::region: return "region";
    case ErrorKind::aliasing: return "aliasing";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::expansion_unsupported: return "expansion-unsupported";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

DiskGeometry::DiskGeometry(double radius) : radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    std::ostringstream msg;
    msg << "disk radius must be positive and finite, got " << radius;
    throw Error(ErrorKind::invalid_argument, msg.str());
  }
}

CartesianPoint to_cartesian(const PolarPoint& p) noexcept {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

namespace {

constexpr double branch_cut_tolerance = 1e-12;

double distance_to_cut(const CartesianPoint& p) {
  return p.x <= 0.0 ? std::abs(p.y) : std::hypot(p.x, p.y);
}

}  // namespace

double theta_of(const CartesianPoint& p) {
  if (distance_to_cut(p) <= branch_cut_tolerance) {
    std::ostringstream msg;
    msg << "point (" << p.x << ", " << p.y << ") lies on the branch cut {x <= 0, y = 0}";
    throw Error(ErrorKind::branch_cut, msg.str());
  }
  if (p.x > 0.0) return std::atan(p.y / p.x);
  if (p.y > 0.0) return -std::atan(p.x / p.y) + pi / 2.0;
  return -std::atan(p.x / p.y) - pi / 2.0;
}

PolarPoint to_polar(const CartesianPoint& p) {
  const double theta = theta_of(p);
  return {p.norm(), theta};
}

}  // namespace harmodisk
