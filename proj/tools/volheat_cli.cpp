// Command line front end: samples the series solution, cross-checks it
// against the marching Volterra solver, runs the third-order-form
// equivalence report, samples the heat field, and verifies the
// parameter-dependence bounds.  Output is CSV or JSON on stdout (or
// --output FILE); diagnostics go to stderr.  Exit codes: 0 success,
// 1 usage/validation error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volheat/bounds.hpp"
#include "volheat/errors.hpp"
#include "volheat/heat.hpp"
#include "volheat/odecheck.hpp"
#include "volheat/series.hpp"
#include "volheat/volterra.hpp"

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;

struct RunConfig {
  double lambda = 1.0;
  double t_max = 1.0;
  int steps = 1000;
  double tol = 1e-10;
  double h0 = 1.0;
  double epsilon = 0.5;
  double x_max = 0.0;  // <= 0 means 4 sqrt(t_max)
  std::string forcing = "paper-eq1";
  std::string output;  // empty means stdout
  int term_cap = volheat::kDefaultTermCap;
};

// All numbers are printed with %.17g so reruns with identical inputs are
// byte-identical and values round-trip through text exactly.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          out += esc;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Minimal ordered JSON writer.  Hand-rolled on purpose: the report schema
// fixes both the key order and the %.17g number format, which generic
// serializers do not guarantee.
class JsonWriter {
 public:
  void open(const std::string& key = "") { item(key, "{", false); ++depth_; first_ = true; }
  void close(bool last = false) {
    --depth_;
    out_ += '\n';
    indent();
    out_ += '}';
    first_ = false;
    if (depth_ == 0 && last) out_ += '\n';
  }
  void field(const std::string& key, double v) { item(key, fmt(v)); }
  void field(const std::string& key, int v) { item(key, std::to_string(v)); }
  void field(const std::string& key, bool v) { item(key, v ? "true" : "false"); }
  void field(const std::string& key, const std::string& v) {
    item(key, "\"" + json_escape(v) + "\"");
  }
  void field(const std::string& key, const std::vector<std::string>& v) {
    std::string arr = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) arr += ", ";
      arr += "\"" + json_escape(v[i]) + "\"";
    }
    arr += "]";
    item(key, arr);
  }
  const std::string& str() const { return out_; }

 private:
  void indent() { out_.append(2 * static_cast<std::size_t>(depth_), ' '); }
  void item(const std::string& key, const std::string& v, bool complete = true) {
    if (depth_ > 0) {
      if (!first_) out_ += ',';
      out_ += '\n';
    }
    first_ = false;
    indent();
    if (!key.empty()) out_ += "\"" + key + "\": ";
    out_ += v;
    (void)complete;
  }
  std::string out_;
  int depth_ = 0;
  bool first_ = true;
};

int emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
    return 1;
  }
  out << payload;
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << cfg.output << "' failed\n";
    return 1;
  }
  return 0;
}

std::string run_series(const RunConfig& c) {
  std::string csv = "t,y,I,J,terms_used\n";
  const double dt = c.t_max / c.steps;
  for (int i = 0; i <= c.steps; ++i) {
    const double t = dt * i;
    const auto I = volheat::eval_I(c.lambda, t, 0.5 * c.tol, c.term_cap);
    const auto J = volheat::eval_J(c.lambda, t, 0.5 * c.tol, c.term_cap);
    const double y = I.value - kSqrt2OverPi * J.value;
    csv += fmt(t) + "," + fmt(y) + "," + fmt(I.value) + "," + fmt(J.value) +
           "," + std::to_string(I.terms_used + J.terms_used) + "\n";
  }
  return csv;
}

std::string run_volterra(const RunConfig& c) {
  const volheat::GridFunction ys =
      volheat::sample_y(c.lambda, c.t_max, c.steps, c.tol, c.term_cap);
  const volheat::GridFunction yv =
      volheat::solve_volterra(c.lambda, c.t_max, c.steps);
  std::string csv = "t,y_series,y_solver,abs_diff\n";
  for (int i = 0; i <= c.steps; ++i) {
    const double a = ys.values[i];
    const double b = yv.values[i];
    csv += fmt(ys.dt * i) + "," + fmt(a) + "," + fmt(b) + "," +
           fmt(std::abs(a - b)) + "\n";
  }
  return csv;
}

std::string run_equivalence(const RunConfig& c) {
  volheat::ModelParams params;
  params.lambda = c.lambda;
  params.t_max = c.t_max;
  const volheat::Forcing forcing = c.forcing == "eq18"
                                       ? volheat::Forcing::full
                                       : volheat::Forcing::half;
  const volheat::EquivalenceReport r =
      volheat::full_equivalence_report(params, c.steps, c.tol, forcing);

  JsonWriter w;
  w.open();
  w.field("lambda", r.lambda);
  w.field("t_max", r.t_max);
  w.field("steps", r.steps);
  w.field("tol", r.tol);
  w.field("forcing", c.forcing);
  w.field("ode_residual_sup", r.ode_residual_sup);
  w.field("y0_error", r.y0_error);
  w.field("dy0_error", r.dy0_error);
  w.field("d2y0_error", r.d2y0_error);
  w.field("d2y0_trend_ok", r.d2y0_trend_ok);
  w.field("integral_bc_error", r.integral_bc_error);
  w.field("first_deriv_identity_sup", r.first_deriv_identity_sup);
  w.field("second_deriv_identity_sup", r.second_deriv_identity_sup);
  w.field("volterra_residual_sup", r.volterra_residual_sup);
  w.open("tolerances");
  w.field("ode_residual", r.tolerances.ode_residual);
  w.field("y0", r.tolerances.y0);
  w.field("dy0", r.tolerances.dy0);
  w.field("d2y0", r.tolerances.d2y0);
  w.field("integral_bc", r.tolerances.integral_bc);
  w.field("deriv_identity", r.tolerances.deriv_identity);
  w.field("volterra_residual", r.tolerances.volterra_residual);
  w.close();
  w.field("pass", r.pass);
  w.close(true);

  std::cerr << "equivalence: " << (r.pass ? "PASS" : "FAIL")
            << " (ode_residual_sup=" << fmt(r.ode_residual_sup) << ")\n";
  return w.str();
}

std::string run_heat(const RunConfig& c) {
  const double x_max = c.x_max > 0.0 ? c.x_max : 4.0 * std::sqrt(c.t_max);
  // One solution over the full horizon serves all four time snapshots,
  // so steps is rounded up to a multiple of 4.
  const int n = ((c.steps + 3) / 4) * 4;
  const volheat::HeatSolution sol(c.lambda, c.h0, c.t_max, n, c.tol);
  const double dt = sol.flux_potential().dt;

  std::string csv = "x,t,u,flux0\n";
  for (int k = 1; k <= 4; ++k) {
    const int idx = (n / 4) * k;
    const double t = dt * idx;
    for (int j = 0; j < 33; ++j) {
      const double x = x_max * (j / 32.0);
      const double u = sol.u_at_index(x, idx);
      csv += fmt(x) + "," + fmt(t) + "," + fmt(u) + ",";
      if (j == 0)
        csv += fmt(volheat::eval_flux0(c.lambda, c.h0, t, c.steps, c.tol));
      csv += "\n";
    }
  }
  return csv;
}

std::string run_bounds(const RunConfig& c) {
  const volheat::BoundsReport r =
      volheat::verify_bounds(c.epsilon, c.t_max, c.h0, 9, c.steps, c.tol);

  JsonWriter w;
  w.open();
  w.field("epsilon", r.epsilon);
  w.field("t_max", r.t_max);
  w.field("h0", r.h0);
  w.field("lambda_threshold", r.lambda_max);
  w.open("solution");
  w.field("lambda_max", r.solution.lambda_max);
  w.field("g_norm_bound", r.solution.g_norm_bound);
  w.field("g_norm_measured", r.solution.g_norm_measured);
  w.field("g_lipschitz_bound", r.solution.g_lipschitz_bound);
  w.field("g_lipschitz_measured", r.solution.g_lipschitz_measured);
  w.field("violations", r.solution.violations);
  w.field("pass", r.solution.pass);
  w.close();
  w.open("heat");
  w.field("lambda_max", r.heat.lambda_max);
  w.field("U_norm_bound", r.heat.U_norm_bound);
  w.field("U_norm_measured", r.heat.U_norm_measured);
  w.field("u_norm_bound", r.heat.u_norm_bound);
  w.field("u_norm_measured", r.heat.u_norm_measured);
  w.field("u_dev_coeff", r.heat.u_dev_coeff);
  w.field("u_dev_bound", r.heat.u_dev_bound);
  w.field("u_dev_measured", r.heat.u_dev_measured);
  w.field("u_lipschitz_bound", r.heat.u_lipschitz_bound);
  w.field("u_lipschitz_measured", r.heat.u_lipschitz_measured);
  w.field("violations", r.heat.violations);
  w.field("pass", r.heat.pass);
  w.close();
  w.field("pass", r.pass);
  w.close(true);

  std::cerr << "bounds: " << (r.pass ? "PASS" : "FAIL") << " (lambda_threshold="
            << fmt(r.lambda_max) << ")\n";
  return w.str();
}

bool load_term_cap(RunConfig& cfg) {
  const char* raw = std::getenv("VOLTERRA_TERM_CAP");
  if (raw == nullptr) return true;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 1000000000L) {
    std::cerr << "error: VOLTERRA_TERM_CAP must be a positive integer, got '"
              << raw << "'\n";
    return false;
  }
  cfg.term_cap = static_cast<int>(std::min(v, 2000000000L));
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (!load_term_cap(cfg)) return 1;

  CLI::App app{"series solution and verification toolkit for a memory-flux "
               "Volterra/heat model"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "coupling constant")
        ->capture_default_str();
    sub->add_option("--t-max", cfg.t_max, "time horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--steps", cfg.steps, "grid subintervals")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "series truncation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "write to FILE instead of stdout");
  };

  CLI::App* series =
      app.add_subcommand("series", "sample the series solution to CSV");
  add_common(series);

  CLI::App* volterra = app.add_subcommand(
      "volterra", "series vs marching product-integration solver (CSV)");
  add_common(volterra);

  CLI::App* equivalence = app.add_subcommand(
      "equivalence", "third-order-form equivalence report (JSON)");
  add_common(equivalence);
  equivalence
      ->add_option("--forcing", cfg.forcing,
                   "forcing coefficient convention: paper-eq1 = "
                   "lambda/(2 sqrt(pi)), eq18 = lambda/sqrt(pi)")
      ->check(CLI::IsMember({"paper-eq1", "eq18"}))
      ->capture_default_str();

  CLI::App* heat = app.add_subcommand(
      "heat", "temperature field samples and boundary flux (CSV)");
  add_common(heat);
  heat->add_option("--h0", cfg.h0, "initial datum scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  heat->add_option("--x-max", cfg.x_max,
                   "spatial extent (default 4 sqrt(t_max))")
      ->check(CLI::PositiveNumber);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "parameter-dependence bound verification (JSON)");
  add_common(bounds);
  bounds->add_option("--h0", cfg.h0, "initial datum scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--epsilon", cfg.epsilon, "contraction margin in (0,1)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (series->parsed()) return emit(cfg, run_series(cfg));
    if (volterra->parsed()) return emit(cfg, run_volterra(cfg));
    if (equivalence->parsed()) return emit(cfg, run_equivalence(cfg));
    if (heat->parsed()) return emit(cfg, run_heat(cfg));
    if (bounds->parsed()) return emit(cfg, run_bounds(cfg));
  } catch (const volheat::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
