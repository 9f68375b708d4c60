#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "harmodisk/estimates.hpp"
#include "harmodisk/harmonic.hpp"

namespace harmodisk {

// Taylor coefficients T[a1][a2] = D^{(a1,a2)}u(x0) / (a1! a2!) for
// a1 + a2 < order, with the data needed for the remainder certificate.
class TaylorExpansion {
public:
  const CartesianPoint& center() const noexcept { return center_; }
  double L() const noexcept { return L_; }
  int order() const noexcept { return order_; }
  // int_{dB_L(x0)} |u| ds by the trapezoidal rule.
  double circle_l1() const noexcept { return circle_l1_; }
  std::size_t circle_nodes() const noexcept { return circle_nodes_; }

  double coeff(int a1, int a2) const;

  // `a1,a2,coef` rows ordered by total degree, then a1 descending.
  void write_csv(std::ostream& out) const;

private:
  friend TaylorExpansion expand(const HarmonicApproximant&, const CartesianPoint&, int,
                                std::size_t);

  CartesianPoint center_;
  double L_ = 0.0;
  int order_ = 0;
  double circle_l1_ = 0.0;
  std::size_t circle_nodes_ = 0;
  std::vector<double> coeffs_;  // row a1, column a2, (order x order)
};

inline constexpr int default_taylor_order = 12;
inline constexpr std::size_t default_circle_nodes = 4096;

// Throws ErrorKind::out_of_domain unless |x0| < R, invalid_argument for order < 1.
TaylorExpansion expand(const HarmonicApproximant& u, const CartesianPoint& center,
                       int order = default_taylor_order,
                       std::size_t circle_nodes = default_circle_nodes);

// int_{dB_L(c)} |u| ds with `nodes` trapezoidal nodes.
double circle_l1_norm(const HarmonicApproximant& u, const CartesianPoint& center, double L,
                      std::size_t nodes = default_circle_nodes);

struct SeriesValue {
  double value = 0.0;
  BoundReport remainder;
};

// Partial sum of degree < order at x0 + h with kappa = |h| / L. Throws
// ErrorKind::region for kappa >= 1/3 unless `force`, in which case the
// remainder report is inapplicable and its value is NaN.
SeriesValue eval_series(const TaylorExpansion& t, const CartesianPoint& h,
                        bool force = false);

}  // namespace harmodisk
