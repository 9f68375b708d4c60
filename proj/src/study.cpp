#include "harmodisk/study.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>

#include "harmodisk/errors.hpp"

namespace harmodisk {

double sup_difference_on_circle(const HarmonicApproximant& u, const HarmonicApproximant& v,
                                double r, std::size_t angles) {
  double worst = 0.0;
  for (std::size_t i = 0; i < angles; ++i) {
    const double theta = uniform_node(i, angles);
    const CartesianPoint p{r * std::cos(theta), r * std::sin(theta)};
    worst = std::max(worst, std::abs(u.eval(p) - v.eval(p)));
  }
  return worst;
}

double boundary_sup_error(const HarmonicApproximant& u, const BoundaryData& b,
                          std::size_t angles) {
  const double radius = b.radius();
  double worst = 0.0;
  for (std::size_t i = 0; i < angles; ++i) {
    const double theta = uniform_node(i, angles);
    const CartesianPoint p{radius * std::cos(theta), radius * std::sin(theta)};
    worst = std::max(worst, std::abs(b.f(theta) - u.eval(p)));
  }
  return worst;
}

double loglog_slope(std::span<const int> degrees, std::span<const double> errors,
                    double floor) {
  if (degrees.size() != errors.size() || degrees.size() < 2) {
    throw Error(ErrorKind::invalid_argument, "slope fit needs >= 2 (n, error) pairs");
  }
  const auto count = static_cast<double>(degrees.size());
  double mx = 0.0;
  double my = 0.0;
  std::vector<double> xs(degrees.size());
  std::vector<double> ys(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    xs[i] = std::log(static_cast<double>(degrees[i]));
    ys[i] = std::log(std::max(errors[i], floor));
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw Error(ErrorKind::invalid_argument, "slope fit needs distinct degrees");
  return sxy / sxx;
}

BoundReport uniform_bound_for(const BoundaryData& b, int n, const CartesianPoint& p,
                              const JacksonConstants& gamma, std::size_t holder_grid) {
  const auto& sm = b.smoothness();
  BoundReport report;
  if (sm && sm->seminorm) {
    if (sm->k == 0) {
      report = uniform_error_bound(*sm->seminorm, sm->alpha, n, p, b.radius(), gamma.gamma(0),
                                   SeminormSource::declared);
    } else {
      report = uniform_error_bound_smooth(*sm->seminorm, sm->k, sm->alpha, n, p, b.radius(),
                                          gamma.gamma(static_cast<std::size_t>(sm->k)),
                                          SeminormSource::declared);
    }
  } else {
    const double alpha = sm ? sm->alpha : 1.0;
    const double seminorm = holder_seminorm_estimate(b, alpha, holder_grid);
    report = uniform_error_bound(seminorm, alpha, n, p, b.radius(), gamma.gamma(0),
                                 SeminormSource::estimated);
  }
  if (b.known_discontinuous()) {
    report.applicable = false;
    report.note = "boundary data is discontinuous";
  } else if (!b.is_periodic()) {
    report.applicable = false;
    report.note = "boundary data is not 2 pi periodic";
  }
  return report;
}

StudyResult run_study(const BoundaryData& b, const StudyOptions& options) {
  if (options.degrees.size() < 2) {
    throw Error(ErrorKind::invalid_argument, "a study needs at least two degrees");
  }
  for (int n : options.degrees) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "study degrees must be >= 1");
  }
  for (double r : options.radii) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw Error(ErrorKind::out_of_domain, "study radii are fractions of R in [0, 1]");
    }
  }
  if (options.proxy_factor < 2) {
    throw Error(ErrorKind::invalid_argument, "proxy factor must be >= 2");
  }

  StudyResult result;
  const int n_top = *std::max_element(options.degrees.begin(), options.degrees.end());
  result.proxy_degree = options.proxy_factor * n_top;
  const auto proxy_n = static_cast<std::size_t>(result.proxy_degree);
  result.quadrature_nodes =
      options.quadrature_nodes.value_or(default_quadrature_nodes(proxy_n));

  const FourierSpectrum full = compute_spectrum(b, proxy_n, result.quadrature_nodes);
  const HarmonicApproximant proxy(full);
  std::vector<HarmonicApproximant> approximants;
  approximants.reserve(options.degrees.size());
  for (int n : options.degrees) {
    approximants.emplace_back(full.truncated(static_cast<std::size_t>(n)));
  }

  const auto [lo, hi] = maximum_principle_bounds(b, result.quadrature_nodes);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  result.error_floor = 64.0 * DBL_EPSILON * scale;

  const double radius = b.radius();
  for (double frac : options.radii) {
    const double r = frac * radius;
    std::vector<double> errors;
    const std::size_t first = result.rows.size();
    for (std::size_t i = 0; i < options.degrees.size(); ++i) {
      StudyRow row;
      row.n = options.degrees[i];
      row.r = r;
      row.measured_sup_err =
          sup_difference_on_circle(approximants[i], proxy, r, options.angles);
      row.bound = uniform_bound_for(b, row.n, {r, 0.0}, options.gamma, options.holder_grid);
      row.bound.inputs.quadrature_nodes = result.quadrature_nodes;
      errors.push_back(row.measured_sup_err);
      result.rows.push_back(std::move(row));
    }
    const double slope = loglog_slope(options.degrees, errors, result.error_floor);
    for (std::size_t i = first; i < result.rows.size(); ++i) result.rows[i].slope_estimate = slope;
  }

  result.proxy_bound =
      uniform_bound_for(b, result.proxy_degree, {radius, 0.0}, options.gamma, options.holder_grid);
  result.proxy_bound.inputs.quadrature_nodes = result.quadrature_nodes;
  return result;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_study_csv(std::ostream& out, const StudyResult& result) {
  out << "n,r,measured_sup_err,bound_value,applicable,slope_estimate\n";
  for (const StudyRow& row : result.rows) {
    out << row.n << ',' << fmt(row.r) << ',' << fmt(row.measured_sup_err) << ','
        << fmt(row.bound.value) << ',' << (row.bound.applicable ? "true" : "false") << ','
        << fmt(row.slope_estimate) << '\n';
  }
}

nlohmann::ordered_json study_reports_json(const StudyResult& result) {
  nlohmann::ordered_json j;
  j["proxy_degree"] = result.proxy_degree;
  j["quadrature_nodes"] = result.quadrature_nodes;
  j["error_floor"] = result.error_floor;
  j["proxy_bound"] = to_json(result.proxy_bound);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const StudyRow& row : result.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["r"] = row.r;
    r["measured_sup_err"] = row.measured_sup_err;
    r["slope_estimate"] = row.slope_estimate;
    r["report"] = to_json(row.bound);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace harmodisk
