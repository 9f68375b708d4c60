#include "harmodisk/corpus.hpp"

#include <cmath>
#include <string>

#include "harmodisk/errors.hpp"

namespace harmodisk {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

double parse_suffix(const std::string& name, std::size_t prefix_len) {
  const std::string rest = name.substr(prefix_len);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(rest, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != rest.size()) {
    throw Error(ErrorKind::invalid_argument, "unknown boundary expression '" + name + "'");
  }
  return v;
}

int parse_mode(const std::string& name, std::size_t prefix_len) {
  const double v = parse_suffix(name, prefix_len);
  if (v < 1.0 || v != std::floor(v) || v > 4096.0) {
    throw Error(ErrorKind::invalid_argument,
                "harmonic index in '" + name + "' must be a positive integer");
  }
  return static_cast<int>(v);
}

CorpusEntry angular(const std::string& name, CorpusClass cls, int degree, double radius,
                    BoundaryData::AngularFunction f, std::optional<Smoothness> s) {
  return CorpusEntry{name, cls, degree,
                     BoundaryData(DiskGeometry(radius), std::move(f), name, s)};
}

CorpusEntry cartesian(const std::string& name, int degree, double radius,
                      std::function<double(double, double)> g, double seminorm) {
  return CorpusEntry{name, CorpusClass::trig_polynomial, degree,
                     pullback(std::move(g), DiskGeometry(radius), name,
                              Smoothness{0, 1.0, seminorm})};
}

}  // namespace

CorpusEntry corpus_entry(const std::string& name, double radius) {
  const double r2 = radius * radius;
  const double r3 = r2 * radius;

  if (name == "x") return cartesian(name, 1, radius, [](double x, double) { return x; }, radius);
  if (name == "y") return cartesian(name, 1, radius, [](double, double y) { return y; }, radius);
  if (name == "x2-y2") {
    return cartesian(name, 2, radius, [](double x, double y) { return x * x - y * y; },
                     2.0 * r2);
  }
  if (name == "2xy") {
    return cartesian(name, 2, radius, [](double x, double y) { return 2.0 * x * y; },
                     2.0 * r2);
  }
  if (name == "re3") {
    return cartesian(name, 3, radius,
                     [](double x, double y) { return x * x * x - 3.0 * x * y * y; }, 3.0 * r3);
  }
  if (name == "im3") {
    return cartesian(name, 3, radius,
                     [](double x, double y) { return 3.0 * x * x * y - y * y * y; }, 3.0 * r3);
  }

  if (name == "hat") {
    return angular(name, CorpusClass::holder, -1, radius,
                   [](double t) { return 1.0 - 2.0 * std::abs(t) / pi; },
                   Smoothness{0, 1.0, 2.0 / pi});
  }
  if (name == "square") {
    auto e = angular(
        name, CorpusClass::discontinuous, -1, radius,
        [](double t) {
          if (t == 0.0 || std::abs(t) == pi) return 0.0;
          return t > 0.0 ? 1.0 : -1.0;
        },
        std::nullopt);
    e.data = e.data.with_discontinuity();
    return e;
  }
  if (name == "parabolic") {
    // f' = pi - 2|theta| is Lipschitz with constant 2.
    return angular(name, CorpusClass::holder, -1, radius,
                   [](double t) { return t * (pi - std::abs(t)); }, Smoothness{1, 1.0, 2.0});
  }
  if (name == "expcos") {
    // max |f''| = e, attained at theta = 0.
    return angular(name, CorpusClass::analytic, -1, radius,
                   [](double t) { return std::exp(std::cos(t)); },
                   Smoothness{1, 1.0, std::exp(1.0)});
  }
  if (starts_with(name, "kernel")) {
    const double q = parse_suffix(name, 6);
    if (!(q > 0.0 && q < 1.0)) {
      throw Error(ErrorKind::invalid_argument, "kernel parameter must lie in (0, 1)");
    }
    // max |f''| = 2q(1 - q^2) / (1 - q)^4 at theta = 0; a_k = 2 q^k.
    const double f2 = 2.0 * q * (1.0 - q * q) / std::pow(1.0 - q, 4);
    return angular(
        name, CorpusClass::analytic, -1, radius,
        [q](double t) { return (1.0 - q * q) / (1.0 - 2.0 * q * std::cos(t) + q * q); },
        Smoothness{1, 1.0, f2});
  }
  if (starts_with(name, "abssin")) {
    const double a = parse_suffix(name, 6);
    if (!(a > 0.0 && a <= 1.0)) {
      throw Error(ErrorKind::invalid_argument, "abssin exponent must lie in (0, 1]");
    }
    // Supremum of the quotient is approached at theta -> 0: 2^{-a}.
    return angular(name, CorpusClass::holder, -1, radius,
                   [a](double t) { return std::pow(std::abs(std::sin(t / 2.0)), a); },
                   Smoothness{0, a, std::pow(2.0, -a)});
  }
  if (starts_with(name, "const")) {
    const double c = parse_suffix(name, 5);
    return angular(name, CorpusClass::trig_polynomial, 0, radius,
                   [c](double) { return c; }, Smoothness{0, 1.0, 0.0});
  }
  if (starts_with(name, "cos")) {
    const int m = parse_mode(name, 3);
    return angular(name, CorpusClass::trig_polynomial, m, radius,
                   [m](double t) { return std::cos(m * t); },
                   Smoothness{0, 1.0, static_cast<double>(m)});
  }
  if (starts_with(name, "sin")) {
    const int m = parse_mode(name, 3);
    return angular(name, CorpusClass::trig_polynomial, m, radius,
                   [m](double t) { return std::sin(m * t); },
                   Smoothness{0, 1.0, static_cast<double>(m)});
  }
  throw Error(ErrorKind::invalid_argument, "unknown boundary expression '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"const5", "cos1",  "sin2",   "cos3",      "x",      "y",
          "x2-y2",  "2xy",   "re3",    "im3",       "expcos", "kernel0.5",
          "hat",    "abssin0.5", "parabolic", "square"};
}

std::vector<std::string> smooth_corpus_names() {
  return {"const5", "cos1", "sin2", "cos3", "x", "y", "x2-y2", "2xy", "re3", "im3",
          "expcos", "kernel0.5"};
}

}  // namespace harmodisk
