#include "harmodisk/taylor.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk {

double TaylorExpansion::coeff(int a1, int a2) const {
  if (a1 < 0 || a2 < 0 || a1 + a2 >= order_) return 0.0;
  return coeffs_[static_cast<std::size_t>(a1) * order_ + a2];
}

void TaylorExpansion::write_csv(std::ostream& out) const {
  out << "a1,a2,coef\n";
  char buf[64];
  for (int total = 0; total < order_; ++total) {
    for (int a1 = total; a1 >= 0; --a1) {
      std::snprintf(buf, sizeof buf, "%.17g", coeff(a1, total - a1));
      out << a1 << ',' << (total - a1) << ',' << buf << '\n';
    }
  }
}

double circle_l1_norm(const HarmonicApproximant& u, const CartesianPoint& c, double L,
                      std::size_t nodes) {
  if (nodes < 4) throw Error(ErrorKind::invalid_argument, "circle quadrature needs >= 4 nodes");
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double phi = 2.0 * pi * static_cast<double>(j) / static_cast<double>(nodes);
    sum += std::abs(u.eval({c.x + L * std::cos(phi), c.y + L * std::sin(phi)}));
  }
  return sum * 2.0 * pi * L / static_cast<double>(nodes);
}

TaylorExpansion expand(const HarmonicApproximant& u, const CartesianPoint& center, int order,
                       std::size_t circle_nodes) {
  if (order < 1) throw Error(ErrorKind::invalid_argument, "Taylor order must be >= 1");
  const double L = u.radius() - center.norm();
  if (!(L > 0.0)) {
    std::ostringstream msg;
    msg << "expansion centre (" << center.x << ", " << center.y
        << ") is not inside the open disk of radius " << u.radius();
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  TaylorExpansion t;
  t.center_ = center;
  t.L_ = L;
  t.order_ = order;
  t.circle_nodes_ = circle_nodes;
  t.circle_l1_ = circle_l1_norm(u, center, L, circle_nodes);
  t.coeffs_.assign(static_cast<std::size_t>(order) * order, 0.0);
  for (int a1 = 0; a1 < order; ++a1) {
    for (int a2 = 0; a1 + a2 < order; ++a2) {
      const double d = u.eval_derivative(center, static_cast<unsigned>(a1),
                                         static_cast<unsigned>(a2));
      t.coeffs_[static_cast<std::size_t>(a1) * order + a2] =
          d / (factorial(a1) * factorial(a2));
    }
  }
  return t;
}

SeriesValue eval_series(const TaylorExpansion& t, const CartesianPoint& h, bool force) {
  const double kappa = h.norm() / t.L();
  const bool certified = kappa < 1.0 / 3.0;
  if (!certified && !force) {
    std::ostringstream msg;
    msg << "|h| / L = " << kappa << " is outside the certified region (< 1/3)";
    throw Error(ErrorKind::region, msg.str());
  }

  SeriesValue out;
  const int order = t.order();
  std::vector<double> p1(order, 1.0);
  std::vector<double> p2(order, 1.0);
  for (int i = 1; i < order; ++i) {
    p1[i] = p1[i - 1] * h.x;
    p2[i] = p2[i - 1] * h.y;
  }
  double sum = 0.0;
  for (int total = 0; total < order; ++total) {
    for (int a1 = 0; a1 <= total; ++a1) sum += t.coeff(a1, total - a1) * p1[a1] * p2[total - a1];
  }
  out.value = sum;

  if (certified) {
    out.remainder = taylor_remainder_bound(kappa, order, t.L(), t.circle_l1());
  } else {
    out.remainder.kind = BoundKind::taylor_remainder;
    out.remainder.inputs.kappa = kappa;
    out.remainder.inputs.n = order;
    out.remainder.inputs.L = t.L();
    out.remainder.inputs.l1 = t.circle_l1();
    out.remainder.value = std::numeric_limits<double>::quiet_NaN();
    out.remainder.applicable = false;
    out.remainder.note = "outside the certified region kappa < 1/3; no certificate";
  }
  out.remainder.inputs.point = CartesianPoint{t.center().x + h.x, t.center().y + h.y};
  out.remainder.inputs.quadrature_nodes = t.circle_nodes();
  return out;
}

}  // namespace harmodisk
