#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "harmodisk/errors.hpp"
#include "harmodisk/harmonic.hpp"
#include "harmodisk/oracle.hpp"
#include "support.hpp"

using namespace harmodisk;
using support::approximant;
using support::random_points;

namespace {

// Direct sum of Re/Im (z/R)^k in long double, for finite-difference oracles.
long double eval_long(const FourierSpectrum& s, long double x, long double y) {
  const std::complex<long double> z(x / s.radius, y / s.radius);
  std::complex<long double> w = 1.0L;
  long double sum = 0.5L * s.a[0];
  for (std::size_t k = 1; k <= s.n_max; ++k) {
    w *= z;
    sum += s.a[k] * w.real() + s.b[k - 1] * w.imag();
  }
  return sum;
}

}  // namespace

TEST(Eval, Examples) {
  EXPECT_NEAR(approximant("x", 4).eval({0.3, 0.4}), 0.3, 1e-14);
  const auto c = approximant("const5", 3);
  for (auto p : random_points(20, 1.0)) EXPECT_NEAR(c.eval(p), 5.0, 1e-13);
  EXPECT_NEAR(approximant("x2-y2", 2).eval({0.6, 0.5}), 0.11, 1e-14);
  const auto sq = approximant("square", 5);
  EXPECT_EQ(sq.eval({0.0, 0.0}), 0.5 * sq.spectrum().a[0]);
  EXPECT_NEAR(sq.eval({0.0, 0.0}), 0.0, 1e-12);
}

TEST(Eval, CenterIsHalfA0) {
  for (const auto& name : corpus_names()) {
    const auto u = approximant(name, 17, 2.5);
    EXPECT_EQ(u.eval({0.0, 0.0}), 0.5 * u.spectrum().a[0]) << name;
  }
}

TEST(PQ, ModulusIdentity) {
  for (auto p : random_points(200, 1.3, 3)) {
    const auto t = pq_table(p.x, p.y, 40);
    const double rho2 = p.x * p.x + p.y * p.y;
    for (std::size_t k = 0; k <= 40; ++k) {
      const double m = std::pow(rho2, static_cast<double>(k));
      ASSERT_NEAR(t[k].p * t[k].p + t[k].q * t[k].q, m, 1e-12 * m + 1e-300);
    }
  }
}

TEST(Derivative, Examples) {
  const auto ux = approximant("x", 3);
  const auto uq = approximant("x2-y2", 4);
  for (auto p : random_points(25, 1.0, 5)) {
    EXPECT_NEAR(ux.eval_derivative(p, 1, 0), 1.0, 1e-13);
    EXPECT_NEAR(uq.eval_derivative(p, 0, 2), -2.0, 1e-12);
    EXPECT_NEAR(uq.eval_derivative(p, 2, 0), 2.0, 1e-12);
  }
  EXPECT_EQ(ux.eval_derivative({0.2, 0.1}, 0, 0), ux.eval({0.2, 0.1}));
}

TEST(Derivative, SquareWaveMixedThirdOrder) {
  const auto u = approximant("square", 5);
  const CartesianPoint p{0.1, 0.2};
  const double exact = u.eval_derivative(p, 2, 1);

  const long double h = 1e-4L;
  const auto& s = u.spectrum();
  auto f = [&](long double dx, long double dy) { return eval_long(s, p.x + dx, p.y + dy); };
  const long double fd = (f(h, h) - 2 * f(0, h) + f(-h, h) - f(h, -h) + 2 * f(0, -h) -
                          f(-h, -h)) / (2 * h * h * h);
  EXPECT_NEAR(exact, static_cast<double>(fd), 1e-6 * std::abs(exact));
  // Symbolic differentiation of the same degree-5 polynomial.
  EXPECT_NEAR(exact, 2.0881106063241139292, 1e-12);
}

TEST(Derivative, AllLowOrdersAgainstFiniteDifferences) {
  // Fourth-order central differences in long double for every order <= 3.
  const auto u = approximant("expcos", 24, 1.5);
  const auto& s = u.spectrum();
  const long double h = 1e-3L;
  for (auto p : random_points(10, 1.2, 9)) {
    auto dx = [&](auto&& g) {
      return [&, g](long double x, long double y) {
        return (-g(x + 2 * h, y) + 8 * g(x + h, y) - 8 * g(x - h, y) + g(x - 2 * h, y)) /
               (12 * h);
      };
    };
    auto dy = [&](auto&& g) {
      return [&, g](long double x, long double y) {
        return (-g(x, y + 2 * h) + 8 * g(x, y + h) - 8 * g(x, y - h) + g(x, y - 2 * h)) /
               (12 * h);
      };
    };
    auto base = [&](long double x, long double y) { return eval_long(s, x, y); };
    const long double xx = p.x;
    const long double yy = p.y;
    EXPECT_NEAR(u.eval_derivative(p, 1, 0), static_cast<double>(dx(base)(xx, yy)), 1e-8);
    EXPECT_NEAR(u.eval_derivative(p, 0, 1), static_cast<double>(dy(base)(xx, yy)), 1e-8);
    EXPECT_NEAR(u.eval_derivative(p, 1, 1), static_cast<double>(dx(dy(base))(xx, yy)), 1e-6);
    EXPECT_NEAR(u.eval_derivative(p, 0, 3), static_cast<double>(dy(dy(dy(base)))(xx, yy)),
                1e-4);
    EXPECT_NEAR(u.eval_derivative(p, 2, 1), static_cast<double>(dx(dx(dy(base)))(xx, yy)),
                1e-4);
  }
}

TEST(Derivative, FirstOrderDoubleDifference) {
  for (const auto& name : smooth_corpus_names()) {
    const auto u = approximant(name, 32);
    const double h = 1e-5;
    for (auto p : random_points(50, 0.95, 13)) {
      const double d = u.eval_derivative(p, 1, 0);
      const double fd = (u.eval({p.x + h, p.y}) - u.eval({p.x - h, p.y})) / (2 * h);
      EXPECT_NEAR(d, fd, 1e-8 * std::max(1.0, std::abs(d))) << name;
    }
  }
}

TEST(Derivative, Harmonicity) {
  for (const auto& name : corpus_names()) {
    for (std::size_t n : {5u, 32u, 128u}) {
      for (double R : {1.0, 0.5, 4.0}) {
        const auto u = approximant(name, n, R);
        const double scale = u.spectrum().coefficient_scale() / (R * R);
        for (auto p : random_points(100, R, n)) {
          const double lap = u.eval_derivative(p, 2, 0) + u.eval_derivative(p, 0, 2);
          ASSERT_LE(std::abs(lap), 1e-10 * std::max(scale, 1e-300))
              << name << " n=" << n << " R=" << R;
        }
      }
    }
  }
}

TEST(Derivative, OverflowReported) {
  const auto u = approximant("cos1", 200);
  try {
    u.eval_derivative({0.5, 0.5}, 170, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::overflow);
  }
}

TEST(Monomials, Examples) {
  const auto q = approximant("x2-y2", 2).monomial_expansion();
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; i + j <= 2; ++j) {
      const double want = (i == 2 && j == 0) ? 1.0 : (i == 0 && j == 2) ? -1.0 : 0.0;
      EXPECT_NEAR(q.at(i, j), want, 1e-14) << i << "," << j;
    }
  }
  const auto c3 = approximant("cos3", 3).monomial_expansion();
  EXPECT_NEAR(c3.at(3, 0), 1.0, 1e-14);
  EXPECT_NEAR(c3.at(1, 2), -3.0, 1e-14);
  EXPECT_NEAR(c3.at(2, 1), 0.0, 1e-14);
  EXPECT_NEAR(c3.at(0, 3), 0.0, 1e-14);
  const auto s2 = approximant("sin2", 2).monomial_expansion();
  EXPECT_NEAR(s2.at(1, 1), 2.0, 1e-14);
}

TEST(Monomials, RadiusFoldedIn) {
  // g = x on the disk of radius 3 is still u = x.
  const auto m = approximant("x", 3, 3.0).monomial_expansion();
  EXPECT_NEAR(m.at(1, 0), 1.0, 1e-14);
  EXPECT_NEAR(m.at(0, 1), 0.0, 1e-14);
}

TEST(Monomials, AgreeWithRecurrence) {
  for (const auto& name : corpus_names()) {
    for (std::size_t n : {3u, 11u, 20u}) {
      const auto u = approximant(name, n);
      const auto m = u.monomial_expansion();
      const double scale = u.spectrum().coefficient_scale();
      for (auto p : random_points(1000, 1.0, n + 100)) {
        const double v = u.eval(p);
        ASSERT_NEAR(m.eval(p.x, p.y), v, 1e-9 * std::max(std::abs(v), scale))
            << name << " n=" << n;
      }
    }
  }
}

TEST(Monomials, DegreeLimit) {
  EXPECT_NO_THROW(approximant("cos1", 60).monomial_expansion());
  try {
    approximant("cos1", 61).monomial_expansion();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::expansion_unsupported);
  }
}

TEST(Monomials, Csv) {
  MonomialTable t(2);
  t.at(2, 0) = 1.0;
  t.at(0, 2) = -1.0;
  t.at(1, 1) = 0.1;
  std::ostringstream out;
  t.write_csv(out);
  EXPECT_EQ(out.str(), "i,j,coef\n0,2,-1\n1,1,0.10000000000000001\n2,0,1\n");
}

TEST(Pipeline, RotationEquivariance) {
  // Shifting uniform samples by s nodes rotates the boundary data by
  // phi = 2 pi s / M, and the approximant rotates with it.
  const std::size_t M = 4096;
  const auto b = corpus_entry("hat").data;
  const auto values = b.node_values(M);
  const auto u = HarmonicApproximant(compute_spectrum(BoundaryData(DiskGeometry(1.0), values), 32, M));
  for (std::size_t shift : {1u, 77u, 1024u, 3000u}) {
    std::vector<double> rotated(M);
    for (std::size_t j = 0; j < M; ++j) rotated[j] = values[(j + shift) % M];
    const auto v = HarmonicApproximant(
        compute_spectrum(BoundaryData(DiskGeometry(1.0), rotated), 32, M));
    const double phi = 2.0 * pi * static_cast<double>(shift) / M;
    for (auto p : random_points(100, 1.0, shift)) {
      const CartesianPoint q{std::cos(phi) * p.x + std::sin(phi) * p.y,
                             -std::sin(phi) * p.x + std::cos(phi) * p.y};
      ASSERT_NEAR(v.eval(q), u.eval(p), 1e-10) << "shift " << shift;
    }
  }
}

TEST(Pipeline, RotationOfClosedForm) {
  const double phi = 0.7123;
  const BoundaryData b(DiskGeometry(2.0), [](double t) { return std::exp(std::cos(t)); }, "e");
  const BoundaryData r(DiskGeometry(2.0),
                       [phi](double t) { return std::exp(std::cos(t + phi)); }, "e-rot");
  const HarmonicApproximant u(compute_spectrum(b, 40, 4096));
  const HarmonicApproximant v(compute_spectrum(r, 40, 4096));
  for (auto p : random_points(200, 2.0, 99)) {
    const CartesianPoint q{std::cos(phi) * p.x + std::sin(phi) * p.y,
                           -std::sin(phi) * p.x + std::cos(phi) * p.y};
    ASSERT_NEAR(v.eval(q), u.eval(p), 1e-10);
  }
}

TEST(Pipeline, BoundaryTraceMatchesPolarSum) {
  for (const auto& name : corpus_names()) {
    const auto u = approximant(name, 64, 1.5);
    for (int i = 0; i < 200; ++i) {
      const double t = -pi + 2.0 * pi * (i + 0.37) / 200.0;
      const double series = u.eval({1.5 * std::cos(t), 1.5 * std::sin(t)});
      ASSERT_NEAR(series, oracle::polar_partial_sum(u.spectrum(), 1.5, t), 1e-12) << name;
    }
  }
}
