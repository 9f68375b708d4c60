#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "harmodisk/fourier.hpp"
#include "harmodisk/geometry.hpp"

namespace harmodisk {

// (P_k, Q_k) at a point in scaled variables (x/R, y/R):
// P_k + i Q_k = (x/R + i y/R)^k, so P_k = (r/R)^k cos k theta and
// Q_k = (r/R)^k sin k theta off the branch cut.
struct PQPair {
  double p = 1.0;
  double q = 0.0;
};

// P_j, Q_j for j = 0..degree by the complex-product recurrence.
std::vector<PQPair> pq_table(double x_scaled, double y_scaled, std::size_t degree);

// Dense bivariate coefficients: u(x, y) = sum m[i][j] x^i y^j.
class MonomialTable {
public:
  explicit MonomialTable(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  double& at(std::size_t i, std::size_t j) { return coef_[i * (degree_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return coef_[i * (degree_ + 1) + j]; }

  // Horner in y inside Horner in x.
  double eval(double x, double y) const;

  // `i,j,coef` rows for every nonzero entry, ordered by (i, j).
  void write_csv(std::ostream& out) const;

private:
  std::size_t degree_;
  std::vector<double> coef_;
};

// Degree-n harmonic polynomial built from a spectrum:
//   u_n(x, y) = a_0/2 + sum_{k=1}^n (a_k P_k + b_k Q_k)(x/R, y/R).
class HarmonicApproximant {
public:
  explicit HarmonicApproximant(FourierSpectrum spectrum);

  const FourierSpectrum& spectrum() const noexcept { return spectrum_; }
  std::size_t degree() const noexcept { return spectrum_.n_max; }
  double radius() const noexcept { return spectrum_.radius; }

  // O(n), no trigonometric calls. Valid on all of R^2.
  double eval(const CartesianPoint& p) const;

  // Exact D^{(alpha1, alpha2)} u_n(p). Each harmonic k >= m = alpha1 + alpha2
  // contributes +-k!/(k-m)! R^{-m} times (a_k P_{k-m} + b_k Q_{k-m}) for even
  // alpha2, or (-a_k Q_{k-m} + b_k P_{k-m}) for odd alpha2, with sign
  // (-1)^{floor(alpha2/2)}. Throws ErrorKind::overflow if the falling
  // factorial or the result is not finite.
  double eval_derivative(const CartesianPoint& p, unsigned alpha1, unsigned alpha2) const;

  // u_n(x, y) as a monomial table with c_k = a_k / R^k folded in.
  // Throws ErrorKind::expansion_unsupported for n > 60.
  MonomialTable monomial_expansion() const;

private:
  FourierSpectrum spectrum_;
};

inline constexpr std::size_t max_expansion_degree = 60;

}  // namespace harmodisk
