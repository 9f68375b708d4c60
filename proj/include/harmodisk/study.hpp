#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "harmodisk/boundary_data.hpp"
#include "harmodisk/estimates.hpp"
#include "harmodisk/harmonic.hpp"

namespace harmodisk {

// max over `angles` equispaced points (theta = -pi + 2 pi i / angles) of the
// circle of radius r of |u(p) - v(p)|.
double sup_difference_on_circle(const HarmonicApproximant& u, const HarmonicApproximant& v,
                                double r, std::size_t angles);

// max over the same boundary grid of |f(theta) - u(R cos theta, R sin theta)|.
double boundary_sup_error(const HarmonicApproximant& u, const BoundaryData& b,
                          std::size_t angles);

// Least-squares slope of log(error) against log(n). Errors below `floor`
// are clamped to it.
double loglog_slope(std::span<const int> degrees, std::span<const double> errors,
                    double floor);

// The uniform error bound at p for degree n, with the seminorm taken from
// declared smoothness when available and estimated otherwise.
BoundReport uniform_bound_for(const BoundaryData& b, int n, const CartesianPoint& p,
                              const JacksonConstants& gamma,
                              std::size_t holder_grid = 2048);

struct StudyOptions {
  std::vector<int> degrees{8, 16, 32, 64, 128};
  std::vector<double> radii{0.0, 0.3, 0.6, 0.9, 1.0};  // fractions of R
  std::size_t angles = 4096;
  int proxy_factor = 4;
  std::optional<std::size_t> quadrature_nodes;  // default_quadrature_nodes(proxy)
  std::size_t holder_grid = 2048;
  JacksonConstants gamma;
};

struct StudyRow {
  int n = 0;
  double r = 0.0;
  double measured_sup_err = 0.0;
  BoundReport bound;
  double slope_estimate = 0.0;  // over all degrees at this radius
};

struct StudyResult {
  std::vector<StudyRow> rows;  // radius-major, degrees in given order
  int proxy_degree = 0;
  std::size_t quadrature_nodes = 0;
  double error_floor = 0.0;
  BoundReport proxy_bound;  // uniform bound for the proxy itself on dB_R
};

// Errors are measured against the converged proxy u_N, N = proxy_factor *
// max(degrees). Requires at least two degrees (invalid_argument).
StudyResult run_study(const BoundaryData& b, const StudyOptions& options);

// Columns n,r,measured_sup_err,bound_value,applicable,slope_estimate.
void write_study_csv(std::ostream& out, const StudyResult& result);

nlohmann::ordered_json study_reports_json(const StudyResult& result);

}  // namespace harmodisk
