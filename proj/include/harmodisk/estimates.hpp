#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "harmodisk/boundary_data.hpp"
#include "harmodisk/geometry.hpp"

namespace harmodisk {

// Jackson constants gamma_0, gamma_1, ..., gamma_K. The defaults (all 3) are
// a placeholder: the true constants are not known, so only the rate shape of
// bounds built from them is meaningful.
class JacksonConstants {
public:
  JacksonConstants() : gamma_{3.0, 3.0} {}
  explicit JacksonConstants(std::vector<double> gamma);

  // gamma_k; indices past the end reuse the last entry.
  double gamma(std::size_t k) const;
  const std::vector<double>& values() const noexcept { return gamma_; }

private:
  std::vector<double> gamma_;
};

enum class BoundKind {
  uniform_error,
  uniform_error_smooth,
  derivative,
  interior_derivative,
  taylor_remainder,
  maximum_principle,
};

enum class SeminormSource { declared, estimated };

const char* to_string(BoundKind kind);
const char* to_string(SeminormSource source);

// Everything that entered a bound. Unset fields are omitted from JSON.
struct BoundInputs {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<double> alpha;
  std::optional<double> seminorm;
  std::optional<SeminormSource> seminorm_source;
  std::optional<CartesianPoint> point;
  std::optional<double> radius;  // R
  std::optional<double> r;       // closed-ball radius for derivative bounds
  std::optional<double> L;
  std::optional<int> alpha1;
  std::optional<int> alpha2;
  std::optional<int> order;
  std::optional<double> l1;  // int |f| dtheta or a circle integral int |u| ds
  std::optional<double> mean_abs;
  std::optional<double> sup_u;
  std::optional<double> kappa;
  std::optional<double> gamma;
  std::optional<std::size_t> quadrature_nodes;
};

struct BoundReport {
  BoundKind kind = BoundKind::uniform_error;
  BoundInputs inputs;
  double value = 0.0;  // NaN when no certificate exists
  bool applicable = true;
  std::string note;
};

nlohmann::ordered_json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

// Re-evaluates a report from its recorded inputs alone.
BoundReport recompute(const BoundReport& r);

// 2 gamma_0 (2 pi)^alpha [f]_{C^alpha} (|p|/R)^{n+1} n^{-alpha} ln n.
// applicable iff n >= e^{1/alpha}. Throws out_of_domain for |p| > R and
// invalid_argument for n < 1 or alpha outside (0, 1].
BoundReport uniform_error_bound(double seminorm, double alpha, int n,
                                const CartesianPoint& p, double radius, double gamma0,
                                SeminormSource source = SeminormSource::declared);

// C^{k,alpha} version: exponent k + alpha, applicable iff n >= e.
BoundReport uniform_error_bound_smooth(double seminorm_k, int k, double alpha, int n,
                                       const CartesianPoint& p, double radius,
                                       double gamma_k,
                                       SeminormSource source = SeminormSource::declared);

// Bound on |D^{(alpha1, alpha2)} u| over the closed ball of radius r < R
// from the L1 boundary norm l1_f = int |f| dtheta.
//   order >= 1: R order! l1_f / (pi (R - r)^{order + 1})
//   order == 0: mean_abs + l1_f r / (pi (R - r)), with mean_abs = l1_f/(2 pi)
// (the zeroth-order form equals R l1_f/(pi (R - r)) - l1_f/(2 pi)).
BoundReport derivative_bound(double l1_f, double mean_abs, unsigned alpha1,
                             unsigned alpha2, double r, double radius);

// Interior estimate at a point from the circle of radius L around it:
//   L1 form  order! / (pi L^{order+1}) * int_{dB_L} |u| ds
//   sup form 2 order! / L^order * sup |u|
// The report value is the smaller of the two.
struct InteriorDerivativeBound {
  double l1_form = 0.0;
  double sup_form = 0.0;
  BoundReport report;
};
InteriorDerivativeBound interior_derivative_bound(double l1_u_circle, double sup_u,
                                                  int order, double L);

// (2 kappa / (1 - kappa))^n * l1_u_circle / (pi L (1 - kappa)).
// Throws ErrorKind::region unless 0 <= kappa < 1/3.
BoundReport taylor_remainder_bound(double kappa, int n, double L, double l1_u_circle);

// Grid minimum and maximum of f over `nodes` uniform quadrature nodes.
std::pair<double, double> maximum_principle_bounds(const BoundaryData& b,
                                                   std::size_t nodes = 4096);

double factorial(int m);

}  // namespace harmodisk
