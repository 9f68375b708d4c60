#include "harmodisk/boundary_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "harmodisk/errors.hpp"

namespace harmodisk {

namespace {

BoundaryData::AngularFunction interpolant(std::vector<double> values) {
  return [values = std::move(values)](double theta) {
    const auto m = static_cast<double>(values.size());
    double t = (theta + pi) / (2.0 * pi) * m;
    t -= m * std::floor(t / m);
    const double cell = std::floor(t);
    const double frac = t - cell;
    const auto i = static_cast<std::size_t>(cell) % values.size();
    const auto j = (i + 1) % values.size();
    return (1.0 - frac) * values[i] + frac * values[j];
  };
}

void require_finite(double v, double theta) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "boundary value is not finite at theta = " << theta;
    throw Error(ErrorKind::invalid_boundary_data, msg.str());
  }
}

}  // namespace

BoundaryData::BoundaryData(DiskGeometry geometry, AngularFunction f, std::string name,
                           std::optional<Smoothness> smoothness)
    : geometry_(geometry),
      f_(std::move(f)),
      source_(ClosedFormSource{std::move(name)}),
      smoothness_(smoothness) {}

BoundaryData::BoundaryData(DiskGeometry geometry, std::vector<double> samples,
                           std::optional<Smoothness> smoothness)
    : geometry_(geometry), source_(SampledSource{samples}), smoothness_(smoothness) {
  if (samples.size() < 4) {
    throw Error(ErrorKind::invalid_boundary_data,
                "sampled boundary data needs at least 4 samples");
  }
  for (std::size_t j = 0; j < samples.size(); ++j) {
    require_finite(samples[j], uniform_node(j, samples.size()));
  }
  f_ = interpolant(std::move(samples));
}

BoundaryData BoundaryData::with_discontinuity() const {
  BoundaryData copy = *this;
  copy.discontinuous_ = true;
  return copy;
}

BoundaryData BoundaryData::with_smoothness(std::optional<Smoothness> s) const {
  BoundaryData copy = *this;
  copy.smoothness_ = s;
  return copy;
}

double BoundaryData::g(double x, double y) const { return f_(std::atan2(y, x)); }

std::vector<double> BoundaryData::node_values(std::size_t nodes) const {
  if (const auto* s = std::get_if<SampledSource>(&source_); s && s->values.size() == nodes) {
    return s->values;
  }
  std::vector<double> out(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double theta = uniform_node(j, nodes);
    out[j] = f_(theta);
    require_finite(out[j], theta);
  }
  return out;
}

bool BoundaryData::is_periodic(double tolerance) const {
  if (std::holds_alternative<SampledSource>(source_)) return true;
  const double lo = f_(-pi);
  const double hi = f_(pi);
  return std::abs(hi - lo) <= tolerance * std::max(1.0, std::abs(hi));
}

BoundaryData pullback(std::function<double(double, double)> g, DiskGeometry geometry,
                      std::string name, std::optional<Smoothness> smoothness) {
  const double radius = geometry.radius();
  BoundaryData::AngularFunction f = [g = std::move(g), radius](double theta) {
    return g(radius * std::cos(theta), radius * std::sin(theta));
  };
  constexpr std::size_t probes = 64;
  for (std::size_t j = 0; j <= probes; ++j) {
    const double theta = -pi + 2.0 * pi * static_cast<double>(j) / probes;
    require_finite(f(theta), theta);
  }
  return BoundaryData(geometry, std::move(f), std::move(name), smoothness);
}

BoundaryData from_samples(DiskGeometry geometry, const std::vector<double>& theta,
                          const std::vector<double>& values,
                          std::optional<Smoothness> smoothness) {
  const std::size_t m = theta.size();
  if (m != values.size()) {
    throw Error(ErrorKind::invalid_boundary_data, "theta and value columns differ in length");
  }
  if (m < 4) {
    throw Error(ErrorKind::invalid_boundary_data,
                "sampled boundary data needs at least 4 samples");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!std::isfinite(theta[j]) || theta[j] < -pi || theta[j] >= pi) {
      throw Error(ErrorKind::invalid_boundary_data, "theta must lie in [-pi, pi)");
    }
    if (j > 0 && !(theta[j] > theta[j - 1])) {
      throw Error(ErrorKind::invalid_boundary_data, "theta must be strictly increasing");
    }
    require_finite(values[j], theta[j]);
  }

  bool uniform = true;
  for (std::size_t j = 0; j < m && uniform; ++j) {
    uniform = std::abs(theta[j] - uniform_node(j, m)) <= 1e-9;
  }
  if (uniform) return BoundaryData(geometry, values, smoothness);

  // Periodic linear interpolation through the given (non-uniform) samples.
  std::vector<double> resampled(m);
  for (std::size_t j = 0; j < m; ++j) {
    double t = uniform_node(j, m);
    if (t < theta.front()) t += 2.0 * pi;
    auto hi = std::upper_bound(theta.begin(), theta.end(), t);
    const std::size_t i = static_cast<std::size_t>(hi - theta.begin()) - 1;
    const double t0 = theta[i];
    const double v0 = values[i];
    const double t1 = i + 1 < m ? theta[i + 1] : theta.front() + 2.0 * pi;
    const double v1 = i + 1 < m ? values[i + 1] : values.front();
    const double w = (t - t0) / (t1 - t0);
    resampled[j] = (1.0 - w) * v0 + w * v1;
  }
  return BoundaryData(geometry, std::move(resampled), smoothness);
}

BoundaryData read_boundary_csv(std::istream& in, DiskGeometry geometry,
                               std::optional<Smoothness> smoothness) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::io, "boundary CSV is empty");
  }
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  if (line != "theta,value") {
    throw Error(ErrorKind::invalid_boundary_data,
                "boundary CSV header must be 'theta,value', got '" + line + "'");
  }
  std::vector<double> theta;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      theta.push_back(std::stod(line.substr(0, comma)));
      values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_boundary_data,
                  "malformed boundary CSV row at line " + std::to_string(lineno));
    }
  }
  return from_samples(geometry, theta, values, smoothness);
}

namespace {

template <typename Distance>
double max_quotient(const BoundaryData& b, double alpha, std::size_t grid_size,
                    Distance distance) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "Hoelder exponent must lie in (0, 1]");
  }
  if (grid_size < 1) {
    throw Error(ErrorKind::invalid_argument, "Hoelder probe grid needs grid_size >= 1");
  }
  const double n = static_cast<double>(grid_size);
  std::vector<double> values(grid_size + 1);
  for (std::size_t i = 0; i <= grid_size; ++i) {
    const double theta = -pi + 2.0 * pi * static_cast<double>(i) / n;
    values[i] = b.f(theta);
    require_finite(values[i], theta);
  }
  double best = 0.0;
  for (std::size_t step = 1; step <= grid_size; step *= 2) {
    const double gap = 2.0 * pi * static_cast<double>(step) / n;
    const double d = distance(gap);
    if (d < 1e-12) continue;  // the pair (-pi, pi) is one point of the circle
    const double denom = std::pow(d, alpha);
    for (std::size_t i = 0; i + step <= grid_size; ++i) {
      best = std::max(best, std::abs(values[i + step] - values[i]) / denom);
    }
  }
  return best;
}

}  // namespace

double holder_seminorm_estimate(const BoundaryData& b, double alpha, std::size_t grid_size) {
  return max_quotient(b, alpha, grid_size, [](double gap) { return gap; });
}

double boundary_holder_seminorm_estimate(const BoundaryData& b, double alpha,
                                         std::size_t grid_size) {
  const double radius = b.radius();
  return max_quotient(b, alpha, grid_size,
                      [radius](double gap) { return 2.0 * radius * std::sin(gap / 2.0); });
}

}  // namespace harmodisk
