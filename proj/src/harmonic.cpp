#include "harmodisk/harmonic.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk {

std::vector<PQPair> pq_table(double xs, double ys, std::size_t degree) {
  std::vector<PQPair> t(degree + 1);
  for (std::size_t k = 1; k <= degree; ++k) {
    const PQPair& prev = t[k - 1];
    t[k] = {xs * prev.p - ys * prev.q, xs * prev.q + ys * prev.p};
  }
  return t;
}

MonomialTable::MonomialTable(std::size_t degree)
    : degree_(degree), coef_((degree + 1) * (degree + 1), 0.0) {}

double MonomialTable::eval(double x, double y) const {
  double result = 0.0;
  for (std::size_t ii = degree_ + 1; ii-- > 0;) {
    double row = 0.0;
    for (std::size_t jj = degree_ + 1; jj-- > 0;) row = row * y + at(ii, jj);
    result = result * x + row;
  }
  return result;
}

void MonomialTable::write_csv(std::ostream& out) const {
  out << "i,j,coef\n";
  char buf[64];
  for (std::size_t i = 0; i <= degree_; ++i) {
    for (std::size_t j = 0; j <= degree_; ++j) {
      if (at(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.17g", at(i, j));
      out << i << ',' << j << ',' << buf << '\n';
    }
  }
}

HarmonicApproximant::HarmonicApproximant(FourierSpectrum spectrum)
    : spectrum_(std::move(spectrum)) {
  if (spectrum_.a.size() != spectrum_.n_max + 1 || spectrum_.b.size() != spectrum_.n_max) {
    throw Error(ErrorKind::invalid_argument, "spectrum coefficient arrays do not match n_max");
  }
  DiskGeometry check(spectrum_.radius);
  (void)check;
}

double HarmonicApproximant::eval(const CartesianPoint& pt) const {
  const double xs = pt.x / spectrum_.radius;
  const double ys = pt.y / spectrum_.radius;
  double p = 1.0;
  double q = 0.0;
  double sum = 0.5 * spectrum_.a[0];
  for (std::size_t k = 1; k <= spectrum_.n_max; ++k) {
    const double pk = xs * p - ys * q;
    q = xs * q + ys * p;
    p = pk;
    sum += spectrum_.a[k] * p + spectrum_.b[k - 1] * q;
  }
  return sum;
}

double HarmonicApproximant::eval_derivative(const CartesianPoint& pt, unsigned alpha1,
                                            unsigned alpha2) const {
  const std::size_t m = static_cast<std::size_t>(alpha1) + alpha2;
  if (m == 0) return eval(pt);
  const std::size_t n = spectrum_.n_max;
  if (m > n) return 0.0;

  const double radius = spectrum_.radius;
  const std::vector<PQPair> pq = pq_table(pt.x / radius, pt.y / radius, n - m);
  const bool odd = alpha2 % 2 == 1;
  const double sign = ((alpha2 / 2) % 2 == 0) ? 1.0 : -1.0;

  double sum = 0.0;
  for (std::size_t k = m; k <= n; ++k) {
    double falling = 1.0;  // k! / (k - m)!
    for (std::size_t i = k - m + 1; i <= k; ++i) falling *= static_cast<double>(i);
    if (!std::isfinite(falling)) {
      std::ostringstream msg;
      msg << "falling factorial " << k << "!/" << (k - m) << "! overflows";
      throw Error(ErrorKind::overflow, msg.str());
    }
    const PQPair& t = pq[k - m];
    const double ak = spectrum_.a[k];
    const double bk = spectrum_.b[k - 1];
    const double term = odd ? (-ak * t.q + bk * t.p) : (ak * t.p + bk * t.q);
    sum += falling * term;
  }
  const double result = sign * sum * std::pow(radius, -static_cast<double>(m));
  if (!std::isfinite(result)) {
    std::ostringstream msg;
    msg << "derivative of order (" << alpha1 << ", " << alpha2 << ") overflows";
    throw Error(ErrorKind::overflow, msg.str());
  }
  return result;
}

MonomialTable HarmonicApproximant::monomial_expansion() const {
  const std::size_t n = spectrum_.n_max;
  if (n > max_expansion_degree) {
    std::ostringstream msg;
    msg << "monomial expansion supports degree <= " << max_expansion_degree << ", got " << n;
    throw Error(ErrorKind::expansion_unsupported, msg.str());
  }
  // Pascal's triangle in 64-bit integers: C(60, 30) < 2^64.
  std::vector<std::vector<std::uint64_t>> binom(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    binom[k].assign(k + 1, 1);
    for (std::size_t j = 1; j < k; ++j) binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
  }

  MonomialTable table(n);
  table.at(0, 0) = 0.5 * spectrum_.a[0];
  double scale = 1.0;  // R^{-k}
  for (std::size_t k = 1; k <= n; ++k) {
    scale /= spectrum_.radius;
    const double ck = spectrum_.a[k] * scale;
    const double dk = spectrum_.b[k - 1] * scale;
    for (std::size_t j = 0; j <= k; ++j) {
      const double c = static_cast<double>(binom[k][j]);
      if (j % 2 == 0) {
        const double s = (j / 2) % 2 == 0 ? 1.0 : -1.0;
        table.at(k - j, j) += s * c * ck;
      } else {
        const double s = ((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        table.at(k - j, j) += s * c * dk;
      }
    }
  }
  return table;
}

}  // namespace harmodisk
