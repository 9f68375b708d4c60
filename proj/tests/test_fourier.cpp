#include <gtest/gtest.h>

#include <cmath>

#include "harmodisk/corpus.hpp"
#include "harmodisk/errors.hpp"
#include "harmodisk/fourier.hpp"
#include "support.hpp"

using namespace harmodisk;

TEST(Spectrum, CosineIsExact) {
  const auto s = compute_spectrum(corpus_entry("cos1").data, 3, 64);
  const std::vector<double> a{0, 1, 0, 0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s.a[k], a[k], 1e-14);
  for (double v : s.b) EXPECT_NEAR(v, 0.0, 1e-14);
  EXPECT_EQ(s.quadrature_nodes, 64u);
}

TEST(Spectrum, Constant) {
  const auto s = compute_spectrum(corpus_entry("const5").data, 6, 128);
  EXPECT_NEAR(s.a[0], 10.0, 1e-13);
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_NEAR(s.a[k], 0.0, 1e-13);
    EXPECT_NEAR(s.sine(k), 0.0, 1e-13);
  }
}

TEST(Spectrum, SquareWaveMatchesClosedForm) {
  const auto s = compute_spectrum(corpus_entry("square").data, 5, 4096);
  for (int k : {1, 3, 5}) EXPECT_NEAR(s.sine(k), 4.0 / (k * pi), 2e-3) << k;
  for (int k : {2, 4}) EXPECT_NEAR(s.sine(k), 0.0, 2e-3) << k;
  for (double v : s.a) EXPECT_NEAR(v, 0.0, 2e-3);
}

TEST(Spectrum, MinimalAdmissibleNodes) {
  const auto b = corpus_entry("cos2").data;
  const auto tight = compute_spectrum(b, 2, 6);
  const auto fine = compute_spectrum(b, 2, 4096);
  EXPECT_NEAR(tight.a[2], 1.0, 1e-15);
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_NEAR(tight.a[k], fine.a[k], 1e-14);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(tight.b[k], fine.b[k], 1e-14);
}

TEST(Spectrum, AliasingRefused) {
  try {
    compute_spectrum(corpus_entry("cos2").data, 2, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::aliasing);
  }
}

TEST(Spectrum, TrigPolynomialExactness) {
  for (const auto& name : corpus_names()) {
    const auto e = corpus_entry(name);
    if (e.cls != CorpusClass::trig_polynomial) continue;
    const std::size_t d = static_cast<std::size_t>(e.degree);
    for (std::size_t n : {d, d + 3, std::size_t{12}}) {
      for (std::size_t M : {n + d + 1, 2 * n + 2, std::size_t{97}, std::size_t{4096}}) {
        if (M < 2 * n + 2) continue;
        const auto s = compute_spectrum(e.data, n, M);
        const auto ref = compute_spectrum(e.data, n, 8192);
        for (std::size_t k = 0; k <= n; ++k) {
          ASSERT_NEAR(s.a[k], ref.a[k], 1e-13) << name << " n=" << n << " M=" << M;
          ASSERT_NEAR(s.sine(k), ref.sine(k), 1e-13) << name << " n=" << n << " M=" << M;
        }
      }
    }
  }
}

TEST(Spectrum, BesselStyleBound) {
  for (const auto& name : corpus_names()) {
    const auto b = corpus_entry(name).data;
    const auto s = compute_spectrum(b, 64, 4096);
    const auto l1 = l1_boundary_norm(b, 4096);
    double sup = 0.0;
    for (double v : b.node_values(4096)) sup = std::max(sup, std::abs(v));
    for (std::size_t k = 0; k <= 64; ++k) {
      EXPECT_LE(std::abs(s.a[k]), l1.theta_integral / pi * (1 + 1e-14)) << name;
      EXPECT_LE(std::abs(s.sine(k)), l1.theta_integral / pi * (1 + 1e-14)) << name;
    }
    EXPECT_LE(l1.theta_integral / pi, 2.0 * sup * (1 + 1e-14)) << name;
  }
}

TEST(Spectrum, ScalingCovariance) {
  const std::vector<double> base{0.3, -1.2, 2.5, 0.7, -0.1, 1.9, -2.2, 0.4};
  for (double lambda : {2.0, -0.5, 0.25, 8.0}) {
    std::vector<double> scaled;
    for (double v : base) scaled.push_back(lambda * v);
    const auto s1 = compute_spectrum(BoundaryData(DiskGeometry(1.0), base), 3, 8);
    const auto s2 = compute_spectrum(BoundaryData(DiskGeometry(1.0), scaled), 3, 8);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(s2.a[k], lambda * s1.a[k]);
      EXPECT_EQ(s2.sine(k), lambda * s1.sine(k));
    }
  }
}

TEST(Spectrum, RefinementStability) {
  for (const std::string name : {"hat", "square", "abssin0.5", "parabolic"}) {
    const auto b = corpus_entry(name).data;
    std::vector<FourierSpectrum> levels;
    for (std::size_t M = 4096; M <= 65536; M *= 2) levels.push_back(compute_spectrum(b, 16, M));
    for (std::size_t k = 0; k <= 16; ++k) {
      double prev = INFINITY;
      for (std::size_t i = 1; i < levels.size(); ++i) {
        const double change = std::max(std::abs(levels[i].a[k] - levels[i - 1].a[k]),
                                       std::abs(levels[i].sine(k) - levels[i - 1].sine(k)));
        // 1e-13 covers summation rounding over 65536 nodes.
        EXPECT_LE(change, prev + 1e-13) << name << " k=" << k;
        prev = change;
      }
    }
  }
}

TEST(L1Norm, Examples) {
  const auto c = l1_boundary_norm(corpus_entry("const5").data, 4096);
  EXPECT_NEAR(c.theta_integral, 10.0 * pi, 1e-12);

  double prev = INFINITY;
  for (std::size_t M = 1024; M <= 65536; M *= 4) {
    const double err = std::abs(l1_boundary_norm(corpus_entry("cos1").data, M).theta_integral - 4.0);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-7);

  const auto s = l1_boundary_norm(corpus_entry("sin1", 2.0).data, 65536);
  EXPECT_NEAR(s.theta_integral, 4.0, 1e-8);
  EXPECT_NEAR(s.boundary_integral, 8.0, 2e-8);
  EXPECT_NEAR(s.mean_abs, 4.0 / (2 * pi), 1e-8);
}

TEST(SpectrumJson, RoundTripAndValidation) {
  const auto s = compute_spectrum(corpus_entry("expcos", 1.5).data, 9, 256);
  const auto back = spectrum_from_json(nlohmann::json::parse(to_json(s).dump()));
  EXPECT_EQ(back.radius, s.radius);
  EXPECT_EQ(back.n_max, s.n_max);
  EXPECT_EQ(back.quadrature_nodes, s.quadrature_nodes);
  EXPECT_EQ(back.a, s.a);
  EXPECT_EQ(back.b, s.b);

  auto bad = nlohmann::json::parse(to_json(s).dump());
  bad["b"].erase(0);
  EXPECT_THROW(spectrum_from_json(bad), Error);
  bad = nlohmann::json::parse(to_json(s).dump());
  bad["R"] = -1.0;
  EXPECT_THROW(spectrum_from_json(bad), Error);
}
