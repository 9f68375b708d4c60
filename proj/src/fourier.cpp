#include "harmodisk/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk {

double FourierSpectrum::coefficient_scale() const {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  for (double v : b) s += std::abs(v);
  return s;
}

FourierSpectrum FourierSpectrum::truncated(std::size_t n) const {
  if (n > n_max) {
    throw Error(ErrorKind::invalid_argument, "cannot truncate a spectrum to a higher degree");
  }
  FourierSpectrum out = *this;
  out.n_max = n;
  out.a.resize(n + 1);
  out.b.resize(n);
  return out;
}

std::size_t default_quadrature_nodes(std::size_t n_max) {
  return std::max<std::size_t>(4096, 8 * n_max);
}

FourierSpectrum compute_spectrum(const BoundaryData& bd, std::size_t n_max,
                                 std::size_t nodes) {
  if (nodes < 2 * n_max + 2) {
    std::ostringstream msg;
    msg << "quadrature with " << nodes << " nodes aliases harmonics up to " << n_max
        << " (need at least " << 2 * n_max + 2 << ")";
    throw Error(ErrorKind::aliasing, msg.str());
  }
  const std::vector<double> f = bd.node_values(nodes);

  // cos(k theta_j) = (-1)^k cos(2 pi (k j mod M) / M): exact argument reduction.
  std::vector<double> cos_table(nodes);
  std::vector<double> sin_table(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double phase = 2.0 * pi * static_cast<double>(i) / static_cast<double>(nodes);
    cos_table[i] = std::cos(phase);
    sin_table[i] = std::sin(phase);
  }

  FourierSpectrum s;
  s.radius = bd.radius();
  s.n_max = n_max;
  s.quadrature_nodes = nodes;
  s.a.assign(n_max + 1, 0.0);
  s.b.assign(n_max, 0.0);
  const double weight = 2.0 / static_cast<double>(nodes);
  for (std::size_t k = 0; k <= n_max; ++k) {
    double ca = 0.0;
    double sb = 0.0;
    std::size_t idx = 0;  // k * j mod M
    for (std::size_t j = 0; j < nodes; ++j) {
      ca += f[j] * cos_table[idx];
      sb += f[j] * sin_table[idx];
      idx += k;
      if (idx >= nodes) idx -= nodes;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s.a[k] = sign * weight * ca;
    if (k > 0) s.b[k - 1] = sign * weight * sb;
  }
  return s;
}

L1Norm l1_boundary_norm(const BoundaryData& bd, std::size_t nodes) {
  if (nodes < 4) {
    throw Error(ErrorKind::invalid_argument, "L1 quadrature needs at least 4 nodes");
  }
  const std::vector<double> f = bd.node_values(nodes);
  double sum = 0.0;
  for (double v : f) sum += std::abs(v);
  L1Norm out;
  out.mean_abs = sum / static_cast<double>(nodes);
  out.theta_integral = 2.0 * pi * out.mean_abs;
  out.boundary_integral = bd.radius() * out.theta_integral;
  out.nodes = nodes;
  return out;
}

nlohmann::ordered_json to_json(const FourierSpectrum& s) {
  nlohmann::ordered_json j;
  j["R"] = s.radius;
  j["n_max"] = s.n_max;
  j["M"] = s.quadrature_nodes;
  j["a"] = s.a;
  j["b"] = s.b;
  return j;
}

FourierSpectrum spectrum_from_json(const nlohmann::json& j) {
  FourierSpectrum s;
  try {
    s.radius = j.at("R").get<double>();
    s.n_max = j.at("n_max").get<std::size_t>();
    s.quadrature_nodes = j.at("M").get<std::size_t>();
    s.a = j.at("a").get<std::vector<double>>();
    s.b = j.at("b").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed spectrum JSON: ") + e.what());
  }
  if (s.a.size() != s.n_max + 1 || s.b.size() != s.n_max) {
    throw Error(ErrorKind::invalid_argument,
                "spectrum JSON: a must have n_max + 1 entries and b n_max entries");
  }
  DiskGeometry check(s.radius);
  (void)check;
  return s;
}

}  // namespace harmodisk
