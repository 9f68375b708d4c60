#include "harmodisk/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "harmodisk/errors.hpp"

namespace harmodisk {

JacksonConstants::JacksonConstants(std::vector<double> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.empty()) {
    throw Error(ErrorKind::invalid_argument, "at least gamma_0 must be given");
  }
  for (double g : gamma_) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw Error(ErrorKind::invalid_argument, "Jackson constants must be positive");
    }
  }
}

double JacksonConstants::gamma(std::size_t k) const {
  return gamma_[std::min(k, gamma_.size() - 1)];
}

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::uniform_error: return "uniform_error";
    case BoundKind::uniform_error_smooth: return "uniform_error_smooth";
    case BoundKind::derivative: return "derivative";
    case BoundKind::interior_derivative: return "interior_derivative";
    case BoundKind::taylor_remainder: return "taylor_remainder";
    case BoundKind::maximum_principle: return "maximum_principle";
  }
  return "unknown";
}

const char* to_string(SeminormSource source) {
  return source == SeminormSource::declared ? "declared" : "estimated";
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  if (!std::isfinite(f)) {
    throw Error(ErrorKind::overflow, "factorial of " + std::to_string(m) + " overflows");
  }
  return f;
}

namespace {

// Tolerance for points produced as R (cos t, sin t) landing a rounding error
// outside the closed disk.
constexpr double boundary_slack = 1e-12;

double radial_ratio(const CartesianPoint& p, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "radius must be positive");
  const double ratio = p.norm() / radius;
  if (ratio > 1.0 + boundary_slack) {
    std::ostringstream msg;
    msg << "point (" << p.x << ", " << p.y << ") lies outside the closed disk of radius "
        << radius;
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  return std::min(ratio, 1.0);
}

void check_common(double seminorm, double alpha, int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "degree n must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "Hoelder exponent must lie in (0, 1]");
  }
  if (!(seminorm >= 0.0) || !std::isfinite(seminorm)) {
    throw Error(ErrorKind::invalid_argument, "seminorm must be finite and nonnegative");
  }
}

double jackson_shape(double gamma, double alpha, double seminorm, double ratio, int n,
                     double exponent) {
  const double nd = static_cast<double>(n);
  return 2.0 * gamma * std::pow(2.0 * pi, alpha) * seminorm * std::pow(ratio, nd + 1.0) *
         std::pow(nd, -exponent) * std::log(nd);
}

}  // namespace

BoundReport uniform_error_bound(double seminorm, double alpha, int n, const CartesianPoint& p,
                                double radius, double gamma0, SeminormSource source) {
  check_common(seminorm, alpha, n);
  const double ratio = radial_ratio(p, radius);
  BoundReport r;
  r.kind = BoundKind::uniform_error;
  r.inputs.n = n;
  r.inputs.alpha = alpha;
  r.inputs.seminorm = seminorm;
  r.inputs.seminorm_source = source;
  r.inputs.point = p;
  r.inputs.radius = radius;
  r.inputs.gamma = gamma0;
  r.value = jackson_shape(gamma0, alpha, seminorm, ratio, n, alpha);
  r.applicable = static_cast<double>(n) >= std::exp(1.0 / alpha);
  if (!r.applicable) r.note = "requires n >= e^(1/alpha)";
  return r;
}

BoundReport uniform_error_bound_smooth(double seminorm_k, int k, double alpha, int n,
                                       const CartesianPoint& p, double radius, double gamma_k,
                                       SeminormSource source) {
  check_common(seminorm_k, alpha, n);
  if (k < 1) throw Error(ErrorKind::invalid_argument, "smooth bound needs k >= 1");
  const double ratio = radial_ratio(p, radius);
  BoundReport r;
  r.kind = BoundKind::uniform_error_smooth;
  r.inputs.n = n;
  r.inputs.k = k;
  r.inputs.alpha = alpha;
  r.inputs.seminorm = seminorm_k;
  r.inputs.seminorm_source = source;
  r.inputs.point = p;
  r.inputs.radius = radius;
  r.inputs.gamma = gamma_k;
  r.value = jackson_shape(gamma_k, alpha, seminorm_k, ratio, n, k + alpha);
  r.applicable = static_cast<double>(n) >= std::exp(1.0);
  if (!r.applicable) r.note = "requires n >= e";
  return r;
}

BoundReport derivative_bound(double l1_f, double mean_abs, unsigned alpha1, unsigned alpha2,
                             double r, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "radius must be positive");
  if (!(r >= 0.0) || r >= radius) {
    std::ostringstream msg;
    msg << "derivative bound needs 0 <= r < R, got r = " << r << ", R = " << radius;
    throw Error(ErrorKind::out_of_domain, msg.str());
  }
  if (!(l1_f >= 0.0)) throw Error(ErrorKind::invalid_argument, "L1 norm must be >= 0");
  const int order = static_cast<int>(alpha1 + alpha2);
  BoundReport rep;
  rep.kind = BoundKind::derivative;
  rep.inputs.alpha1 = static_cast<int>(alpha1);
  rep.inputs.alpha2 = static_cast<int>(alpha2);
  rep.inputs.r = r;
  rep.inputs.radius = radius;
  rep.inputs.l1 = l1_f;
  rep.inputs.mean_abs = mean_abs;
  if (order == 0) {
    rep.value = mean_abs + l1_f * r / (pi * (radius - r));
  } else {
    rep.value = radius * factorial(order) * l1_f / (pi * std::pow(radius - r, order + 1));
  }
  if (!std::isfinite(rep.value)) {
    throw Error(ErrorKind::overflow, "derivative bound overflows");
  }
  return rep;
}

InteriorDerivativeBound interior_derivative_bound(double l1_u_circle, double sup_u, int order,
                                                  double L) {
  if (!(L > 0.0)) throw Error(ErrorKind::invalid_argument, "L must be positive");
  if (order < 1) throw Error(ErrorKind::invalid_argument, "order must be >= 1");
  const double fact = factorial(order);
  InteriorDerivativeBound out;
  out.l1_form = fact * l1_u_circle / (pi * std::pow(L, order + 1));
  out.sup_form = 2.0 * fact * sup_u / std::pow(L, order);
  out.report.kind = BoundKind::interior_derivative;
  out.report.inputs.order = order;
  out.report.inputs.L = L;
  out.report.inputs.l1 = l1_u_circle;
  out.report.inputs.sup_u = sup_u;
  out.report.value = std::min(out.l1_form, out.sup_form);
  return out;
}

BoundReport taylor_remainder_bound(double kappa, int n, double L, double l1_u_circle) {
  if (!(kappa >= 0.0 && kappa < 1.0 / 3.0)) {
    std::ostringstream msg;
    msg << "kappa = " << kappa << " is outside the certified region [0, 1/3)";
    throw Error(ErrorKind::region, msg.str());
  }
  if (!(L > 0.0)) throw Error(ErrorKind::invalid_argument, "L must be positive");
  if (n < 1) throw Error(ErrorKind::invalid_argument, "truncation order must be >= 1");
  BoundReport r;
  r.kind = BoundKind::taylor_remainder;
  r.inputs.kappa = kappa;
  r.inputs.n = n;
  r.inputs.L = L;
  r.inputs.l1 = l1_u_circle;
  r.value = std::pow(2.0 * kappa / (1.0 - kappa), n) * l1_u_circle / (pi * L * (1.0 - kappa));
  return r;
}

std::pair<double, double> maximum_principle_bounds(const BoundaryData& b, std::size_t nodes) {
  const std::vector<double> f = b.node_values(nodes);
  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  return {*lo, *hi};
}

namespace {

template <typename T>
void put(nlohmann::ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) v = j.at(key).get<T>();
}

}  // namespace

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  const BoundInputs& i = r.inputs;
  put(in, "n", i.n);
  put(in, "k", i.k);
  put(in, "alpha", i.alpha);
  put(in, "seminorm", i.seminorm);
  if (i.seminorm_source) in["seminorm_source"] = to_string(*i.seminorm_source);
  if (i.point) in["point"] = {i.point->x, i.point->y};
  put(in, "R", i.radius);
  put(in, "r", i.r);
  put(in, "L", i.L);
  put(in, "alpha1", i.alpha1);
  put(in, "alpha2", i.alpha2);
  put(in, "order", i.order);
  put(in, "l1", i.l1);
  put(in, "mean_abs", i.mean_abs);
  put(in, "sup_u", i.sup_u);
  put(in, "kappa", i.kappa);
  put(in, "gamma", i.gamma);
  put(in, "quadrature_nodes", i.quadrature_nodes);

  nlohmann::ordered_json j;
  j["kind"] = to_string(r.kind);
  j["inputs"] = std::move(in);
  if (std::isfinite(r.value)) {
    j["value"] = r.value;
  } else {
    j["value"] = nullptr;
  }
  j["applicable"] = r.applicable;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
  BoundReport r;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    bool found = false;
    for (BoundKind k : {BoundKind::uniform_error, BoundKind::uniform_error_smooth,
                        BoundKind::derivative, BoundKind::interior_derivative,
                        BoundKind::taylor_remainder, BoundKind::maximum_principle}) {
      if (kind == to_string(k)) {
        r.kind = k;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::invalid_argument, "unknown bound kind '" + kind + "'");
    const auto& in = j.at("inputs");
    BoundInputs& i = r.inputs;
    get(in, "n", i.n);
    get(in, "k", i.k);
    get(in, "alpha", i.alpha);
    get(in, "seminorm", i.seminorm);
    if (in.contains("seminorm_source")) {
      i.seminorm_source = in.at("seminorm_source").get<std::string>() == "declared"
                              ? SeminormSource::declared
                              : SeminormSource::estimated;
    }
    if (in.contains("point")) i.point = CartesianPoint{in.at("point")[0], in.at("point")[1]};
    get(in, "R", i.radius);
    get(in, "r", i.r);
    get(in, "L", i.L);
    get(in, "alpha1", i.alpha1);
    get(in, "alpha2", i.alpha2);
    get(in, "order", i.order);
    get(in, "l1", i.l1);
    get(in, "mean_abs", i.mean_abs);
    get(in, "sup_u", i.sup_u);
    get(in, "kappa", i.kappa);
    get(in, "gamma", i.gamma);
    get(in, "quadrature_nodes", i.quadrature_nodes);
    r.value = j.at("value").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                      : j.at("value").get<double>();
    r.applicable = j.at("applicable").get<bool>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed bound report: ") + e.what());
  }
  return r;
}

BoundReport recompute(const BoundReport& r) {
  const BoundInputs& i = r.inputs;
  auto need = [&](bool ok) {
    if (!ok) {
      throw Error(ErrorKind::invalid_argument,
                  std::string("report of kind ") + to_string(r.kind) + " lacks inputs");
    }
  };
  BoundReport out;
  switch (r.kind) {
    case BoundKind::uniform_error:
      need(i.seminorm && i.alpha && i.n && i.point && i.radius && i.gamma);
      out = uniform_error_bound(*i.seminorm, *i.alpha, *i.n, *i.point, *i.radius, *i.gamma,
                                i.seminorm_source.value_or(SeminormSource::declared));
      break;
    case BoundKind::uniform_error_smooth:
      need(i.seminorm && i.k && i.alpha && i.n && i.point && i.radius && i.gamma);
      out = uniform_error_bound_smooth(*i.seminorm, *i.k, *i.alpha, *i.n, *i.point, *i.radius,
                                       *i.gamma,
                                       i.seminorm_source.value_or(SeminormSource::declared));
      break;
    case BoundKind::derivative:
      need(i.l1 && i.mean_abs && i.alpha1 && i.alpha2 && i.r && i.radius);
      out = derivative_bound(*i.l1, *i.mean_abs, static_cast<unsigned>(*i.alpha1),
                             static_cast<unsigned>(*i.alpha2), *i.r, *i.radius);
      break;
    case BoundKind::interior_derivative:
      need(i.l1 && i.sup_u && i.order && i.L);
      out = interior_derivative_bound(*i.l1, *i.sup_u, *i.order, *i.L).report;
      break;
    case BoundKind::taylor_remainder:
      need(i.kappa && i.n && i.L && i.l1);
      if (!r.applicable) return r;
      out = taylor_remainder_bound(*i.kappa, *i.n, *i.L, *i.l1);
      break;
    case BoundKind::maximum_principle:
      return r;
  }
  // Context-only fields do not enter the formulas.
  out.inputs.quadrature_nodes = i.quadrature_nodes;
  out.applicable = out.applicable && r.applicable;
  out.note = r.note;
  return out;
}

}  // namespace harmodisk
