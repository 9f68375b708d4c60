#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "config.hpp"
#include "harmodisk/boundary_data.hpp"
#include "harmodisk/corpus.hpp"
#include "harmodisk/errors.hpp"
#include "harmodisk/estimates.hpp"
#include "harmodisk/fourier.hpp"
#include "harmodisk/harmonic.hpp"
#include "harmodisk/oracle.hpp"
#include "harmodisk/study.hpp"
#include "harmodisk/taylor.hpp"

namespace harmodisk::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::out_of_domain:
    case ErrorKind::region:
    case ErrorKind::branch_cut:
    case ErrorKind::expansion_unsupported:
      return exit_domain;
    case ErrorKind::io:
      return exit_io;
    case ErrorKind::overflow:
    case ErrorKind::aliasing:
    case ErrorKind::invalid_boundary_data:
      return exit_numeric;
    case ErrorKind::invalid_argument:
      return exit_usage;
  }
  return exit_usage;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
  return out;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream out = open_out(path);
  write(out);
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  std::size_t u1 = 0;
  std::size_t u2 = 0;
  double a = 0.0;
  double b = 0.0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(what);
    const std::string s1 = text.substr(0, comma);
    const std::string s2 = text.substr(comma + 1);
    a = std::stod(s1, &u1);
    b = std::stod(s2, &u2);
    if (u1 != s1.size() || u2 != s2.size()) throw std::invalid_argument(what);
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + " expects two comma-separated numbers, got '" + text + "'");
  }
  return {a, b};
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in = open_in(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<CartesianPoint> read_points_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::io, "points CSV '" + path + "' is empty");
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  if (line != "x,y") {
    throw Error(ErrorKind::invalid_argument, "points CSV header must be 'x,y'");
  }
  std::vector<CartesianPoint> points;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto [x, y] = parse_pair(line, "points CSV row");
    points.push_back({x, y});
  }
  return points;
}

struct BoundaryArgs {
  std::string file;
  std::string expr;
  double radius = 1.0;
  std::optional<double> alpha;
  std::optional<int> k;
  std::optional<double> seminorm;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--boundary", file, "Boundary CSV with header theta,value");
    auto* e = cmd->add_option("--boundary-expr", expr, "Built-in boundary expression");
    f->excludes(e);
    cmd->add_option("--R", radius, "Disk radius")->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", alpha, "Hoelder exponent of f^(k), in (0, 1]");
    cmd->add_option("--k", k, "Declared differentiability order k");
    cmd->add_option("--seminorm", seminorm,
                    "Declared [f^(k)]_{C^alpha}; without it the seminorm is estimated");
  }

  bool given() const { return !file.empty() || !expr.empty(); }

  BoundaryData load() const {
    if (!given()) {
      throw Error(ErrorKind::invalid_argument, "one of --boundary or --boundary-expr is required");
    }
    std::optional<Smoothness> declared;
    if (alpha || k || seminorm) {
      declared = Smoothness{k.value_or(0), alpha.value_or(1.0), seminorm};
    }
    if (!expr.empty()) {
      BoundaryData data = corpus_entry(expr, radius).data;
      return declared ? data.with_smoothness(declared) : data;
    }
    std::ifstream in = open_in(file);
    return read_boundary_csv(in, DiskGeometry(radius), declared);
  }
};

struct SolveArgs {
  BoundaryArgs boundary;
  int n = 32;
  std::optional<std::size_t> nodes;
  std::string output;
  std::string monomials;
};

struct EvalArgs {
  BoundaryArgs boundary;
  std::string spectrum;
  std::string points;
  std::string deriv;
  bool compare_oracle = false;
  std::size_t poisson_nodes = 0;
  std::string output;
};

struct StudyArgs {
  BoundaryArgs boundary;
  std::vector<int> degrees{8, 16, 32, 64, 128};
  std::vector<double> radii{0.0, 0.3, 0.6, 0.9, 1.0};
  std::optional<std::size_t> nodes;
  std::optional<std::size_t> angles;
  int proxy_factor = 4;
  std::optional<double> gamma0;
  std::optional<double> gamma_k;
  std::string output;
  std::string reports;
};

struct TaylorArgs {
  std::string spectrum;
  std::string center = "0,0";
  int order = default_taylor_order;
  std::string h = "0,0";
  bool force = false;
  std::optional<std::size_t> circle_nodes;
  std::string output;
  std::string expansion;
};

int cmd_solve(const SolveArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (a.n < 0) throw Error(ErrorKind::invalid_argument, "--n must be >= 0");
  const BoundaryData data = a.boundary.load();
  const auto n = static_cast<std::size_t>(a.n);
  const std::size_t nodes =
      a.nodes.value_or(cfg.quadrature_nodes.value_or(default_quadrature_nodes(n)));
  const FourierSpectrum s = compute_spectrum(data, n, nodes);
  const L1Norm l1 = l1_boundary_norm(data, nodes);
  const auto [lo, hi] = maximum_principle_bounds(data, nodes);

  emit(a.output, out, [&](std::ostream& o) { o << to_json(s).dump(2) << '\n'; });
  if (!a.monomials.empty()) {
    const MonomialTable table = HarmonicApproximant(s).monomial_expansion();
    emit(a.monomials, out, [&](std::ostream& o) { table.write_csv(o); });
  }

  std::ostream& summary = a.output.empty() ? err : out;
  summary << "center_value=" << fmt(0.5 * s.a[0]) << '\n'
          << "l1_theta=" << fmt(l1.theta_integral) << '\n'
          << "l1_boundary=" << fmt(l1.boundary_integral) << '\n'
          << "min_g=" << fmt(lo) << '\n'
          << "max_g=" << fmt(hi) << '\n'
          << "quadrature_nodes=" << nodes << '\n';
  return exit_ok;
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const FourierSpectrum s = spectrum_from_json(read_json(a.spectrum));
  const HarmonicApproximant u(s);
  const std::vector<CartesianPoint> points = read_points_csv(a.points);

  std::optional<std::pair<unsigned, unsigned>> order;
  if (!a.deriv.empty()) {
    const auto [d1, d2] = parse_pair(a.deriv, "--deriv");
    if (d1 < 0 || d2 < 0 || d1 != std::floor(d1) || d2 != std::floor(d2)) {
      throw Error(ErrorKind::invalid_argument, "--deriv expects nonnegative integers");
    }
    order = std::make_pair(static_cast<unsigned>(d1), static_cast<unsigned>(d2));
  }
  std::optional<BoundaryData> data;
  if (a.compare_oracle) {
    if (order) {
      throw Error(ErrorKind::invalid_argument, "--compare-oracle compares values, not --deriv");
    }
    data = a.boundary.load();
    if (std::abs(data->radius() - s.radius) > 1e-12 * s.radius) {
      throw Error(ErrorKind::invalid_argument, "boundary radius differs from the spectrum's R");
    }
  }

  std::size_t flagged = 0;
  emit(a.output, out, [&](std::ostream& o) {
    if (a.compare_oracle) {
      o << "x,y,series_value,poisson_value,abs_diff\n";
    } else if (order) {
      o << "x,y,d_value\n";
    } else {
      o << "x,y,value\n";
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      const CartesianPoint& p = points[i];
      const double rho = p.norm() / s.radius;
      const bool inside = a.compare_oracle ? rho < 1.0 : rho <= 1.0 + 1e-12;
      o << fmt(p.x) << ',' << fmt(p.y) << ',';
      if (!inside) {
        ++flagged;
        err << "row " << i + 1 << ": point (" << fmt(p.x) << ", " << fmt(p.y)
            << ") is outside the " << (a.compare_oracle ? "open" : "closed") << " disk\n";
        o << (a.compare_oracle ? "nan,nan,nan" : "nan") << '\n';
        continue;
      }
      if (a.compare_oracle) {
        const double series = u.eval(p);
        const double poisson = oracle::poisson_eval(*data, p, a.poisson_nodes);
        o << fmt(series) << ',' << fmt(poisson) << ',' << fmt(std::abs(series - poisson))
          << '\n';
      } else if (order) {
        o << fmt(u.eval_derivative(p, order->first, order->second)) << '\n';
      } else {
        o << fmt(u.eval(p)) << '\n';
      }
    }
  });
  return flagged == 0 ? exit_ok : exit_domain;
}

int cmd_study(const StudyArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const BoundaryData data = a.boundary.load();
  StudyOptions opt;
  opt.degrees = a.degrees;
  opt.radii = a.radii;
  opt.proxy_factor = a.proxy_factor;
  opt.quadrature_nodes = a.nodes ? a.nodes : cfg.quadrature_nodes;
  if (const auto angles = a.angles ? a.angles : cfg.angles) opt.angles = *angles;
  if (cfg.holder_grid) opt.holder_grid = *cfg.holder_grid;
  const double g0 = a.gamma0.value_or(cfg.gamma0.value_or(3.0));
  const double gk = a.gamma_k.value_or(cfg.gamma_k.value_or(3.0));
  opt.gamma = JacksonConstants({g0, gk});

  const StudyResult result = run_study(data, opt);
  emit(a.output, out, [&](std::ostream& o) { write_study_csv(o, result); });
  if (!a.reports.empty()) {
    emit(a.reports, out,
         [&](std::ostream& o) { o << study_reports_json(result).dump(2) << '\n'; });
  }
  // Bound levels depend on the unknown Jackson constants: report, never fail.
  for (const StudyRow& row : result.rows) {
    if (row.bound.applicable && row.measured_sup_err > row.bound.value) {
      err << "diagnostic: n=" << row.n << " r=" << fmt(row.r)
          << " measured error exceeds the bound (" << fmt(row.measured_sup_err) << " > "
          << fmt(row.bound.value) << ", seminorm "
          << to_string(row.bound.inputs.seminorm_source.value_or(SeminormSource::estimated))
          << ")\n";
    }
  }
  return exit_ok;
}

int cmd_taylor(const TaylorArgs& a, const Config& cfg, std::ostream& out) {
  const FourierSpectrum s = spectrum_from_json(read_json(a.spectrum));
  const HarmonicApproximant u(s);
  const auto [cx, cy] = parse_pair(a.center, "--center");
  const auto [h1, h2] = parse_pair(a.h, "--h");
  const std::size_t nodes = a.circle_nodes.value_or(cfg.circle_nodes.value_or(default_circle_nodes));
  const TaylorExpansion t = expand(u, {cx, cy}, a.order, nodes);
  const SeriesValue sv = eval_series(t, {h1, h2}, a.force);
  const double truth = u.eval({cx + h1, cy + h2});

  if (!a.expansion.empty()) emit(a.expansion, out, [&](std::ostream& o) { t.write_csv(o); });

  out << "value=" << fmt(sv.value) << '\n'
      << "true_value=" << fmt(truth) << '\n'
      << "abs_error=" << fmt(std::abs(truth - sv.value)) << '\n'
      << "remainder_bound=" << (sv.remainder.applicable ? fmt(sv.remainder.value) : "none")
      << '\n'
      << "kappa=" << fmt(*sv.remainder.inputs.kappa) << '\n'
      << "L=" << fmt(t.L()) << '\n'
      << "circle_l1=" << fmt(t.circle_l1()) << '\n';

  if (!a.output.empty()) {
    nlohmann::ordered_json j;
    j["center"] = {cx, cy};
    j["h"] = {h1, h2};
    j["order"] = a.order;
    j["value"] = sv.value;
    j["true_value"] = truth;
    j["certificate"] = to_json(sv.remainder);
    emit(a.output, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic-polynomial solver for the Dirichlet problem on a disk", "harmodisk"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "Config file (overrides HARMODISK_CONFIG)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the Fourier spectrum of boundary data");
  solve.boundary.attach(solve_cmd);
  solve_cmd->add_option("--n", solve.n, "Highest retained harmonic");
  solve_cmd->add_option("--M", solve.nodes, "Quadrature nodes (default max(4096, 8n))");
  solve_cmd->add_option("-o,--output", solve.output, "Spectrum JSON path (default stdout)");
  solve_cmd->add_option("--monomials", solve.monomials, "Write the i,j,coef expansion here");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the approximant at points");
  eval.boundary.attach(eval_cmd);
  eval_cmd->add_option("--spectrum", eval.spectrum, "Spectrum JSON")->required();
  eval_cmd->add_option("--points", eval.points, "Points CSV with header x,y")->required();
  eval_cmd->add_option("--deriv", eval.deriv, "Derivative order a1,a2");
  eval_cmd->add_flag("--compare-oracle", eval.compare_oracle,
                     "Compare with Poisson-integral quadrature (needs boundary data)");
  eval_cmd->add_option("--poisson-nodes", eval.poisson_nodes, "Oracle nodes (0 = automatic)");
  eval_cmd->add_option("-o,--output", eval.output, "Output CSV (default stdout)");

  StudyArgs study;
  auto* study_cmd = app.add_subcommand("study", "Convergence study against a converged proxy");
  study.boundary.attach(study_cmd);
  study_cmd->add_option("--n-list", study.degrees, "Degrees")->delimiter(',');
  study_cmd->add_option("--radii", study.radii, "Radii as fractions of R")->delimiter(',');
  study_cmd->add_option("--M", study.nodes, "Quadrature nodes");
  study_cmd->add_option("--angles", study.angles, "Angles per measurement circle");
  study_cmd->add_option("--proxy-factor", study.proxy_factor, "Proxy degree multiplier");
  study_cmd->add_option("--gamma0", study.gamma0, "Jackson constant gamma_0");
  study_cmd->add_option("--gamma-k", study.gamma_k, "Jackson constant gamma_k");
  study_cmd->add_option("-o,--output", study.output, "Convergence table CSV (default stdout)");
  study_cmd->add_option("--reports", study.reports, "Bound reports JSON");

  TaylorArgs taylor;
  auto* taylor_cmd = app.add_subcommand("taylor", "Certified Taylor expansion at a point");
  taylor_cmd->set_help_flag("--help", "Print this help message and exit");
  taylor_cmd->add_option("--spectrum", taylor.spectrum, "Spectrum JSON")->required();
  taylor_cmd->add_option("--center", taylor.center, "Expansion centre x,y");
  taylor_cmd->add_option("--order", taylor.order, "Truncation order");
  taylor_cmd->add_option("--h", taylor.h, "Displacement h1,h2");
  taylor_cmd->add_flag("--force", taylor.force, "Evaluate outside the certified region");
  taylor_cmd->add_option("--circle-nodes", taylor.circle_nodes, "Nodes for the circle L1 norm");
  taylor_cmd->add_option("-o,--output", taylor.output, "Certificate JSON path");
  taylor_cmd->add_option("--expansion", taylor.expansion, "Write a1,a2,coef table here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const Config cfg = config_path.empty() ? config_from_environment()
                                           : load_config_file(config_path);
    if (*solve_cmd) return cmd_solve(solve, cfg, out, err);
    if (*eval_cmd) return cmd_eval(eval, out, err);
    if (*study_cmd) return cmd_study(study, cfg, out, err);
    if (*taylor_cmd) return cmd_taylor(taylor, cfg, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return exit_usage;
}

}  // namespace harmodisk::cli
