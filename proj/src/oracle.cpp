#include "harmodisk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk::oracle {

std::size_t default_poisson_nodes(const CartesianPoint& p, double radius) {
  const double gap = 1.0 - p.norm() / radius;
  if (!(gap > 0.0)) return 0;
  return std::max<std::size_t>(8192, static_cast<std::size_t>(std::ceil(100.0 / gap)));
}

double poisson_eval(const BoundaryData& b, const CartesianPoint& p, std::size_t nodes) {
  const double radius = b.radius();
  const double rho2 = p.x * p.x + p.y * p.y;
  if (!(std::sqrt(rho2) < radius)) {
    std::ostringstream msg;
    msg << "Poisson integral needs a point strictly inside the disk, got (" << p.x << ", "
        << p.y << ")";
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  if (nodes == 0) nodes = default_poisson_nodes(p, radius);
  const std::vector<double> g = b.node_values(nodes);
  // |R e^{i phi} - p|^2 written as a sum of squares: no cancellation near dB_R.
  // Neumaier summation keeps the peaked integrand from losing digits.
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double phi = uniform_node(j, nodes);
    const double dx = radius * std::cos(phi) - p.x;
    const double dy = radius * std::sin(phi) - p.y;
    const double term = g[j] / (dx * dx + dy * dy);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  const double weight = (radius - std::sqrt(rho2)) * (radius + std::sqrt(rho2));
  return weight / static_cast<double>(nodes) * (sum + carry);
}

double polar_partial_sum(const FourierSpectrum& s, double r, double theta) {
  if (!(r >= 0.0) || r > s.radius) {
    std::ostringstream msg;
    msg << "polar partial sum needs 0 <= r <= R, got r = " << r;
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  const double rho = r / s.radius;
  double sum = 0.5 * s.a[0];
  double power = 1.0;
  for (std::size_t k = 1; k <= s.n_max; ++k) {
    power *= rho;
    const double kt = static_cast<double>(k) * theta;
    sum += power * (s.a[k] * std::cos(kt) + s.b[k - 1] * std::sin(kt));
  }
  return sum;
}

double abel_sum(std::span<const double> a, std::span<const double> b) {
  if (b.empty() || a.size() != b.size() + 1) {
    throw Error(ErrorKind::invalid_argument,
                "summation by parts needs |b| >= 1 and |a| = |b| + 1");
  }
  const std::size_t m = b.size();
  double partial = 0.0;  // B_k
  double correction = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    partial += b[k];
    correction += (a[k + 1] - a[k]) * partial;
  }
  return a[m] * partial - correction;
}

}  // namespace harmodisk::oracle
