#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/output.hpp"
#include "ptrig/constants.hpp"
#include "ptrig/eigen.hpp"
#include "ptrig/errors.hpp"
#include "ptrig/forward.hpp"
#include "ptrig/ineq.hpp"
#include "ptrig/inverse.hpp"

namespace ptrig::cli {
namespace {

using nlohmann::ordered_json;

const std::vector<double> kTableGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

struct CommonOptions {
  std::string format = "text";
  int precision = 5;
  std::string out;

  OutputSpec spec() const {
    OutputSpec s;
    s.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    s.precision = precision;
    s.destination = out;
    return s;
  }
};

void add_output_options(CLI::App* app, CommonOptions& o) {
  app->add_option("--format", o.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app->add_option("--precision", o.precision, "decimal digits (1-17)")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app->add_option("--out", o.out, "write to this file instead of standard output");
}

Cell fixed(double v) { return Number{v, Style::fixed}; }
Cell sci(double v) { return Number{v, Style::scientific}; }
Cell automatic(double v) { return Number{v, Style::automatic}; }

ordered_json base_config(const char* command, const CommonOptions& o) {
  ordered_json c;
  c["command"] = command;
  c["format"] = o.format;
  c["precision"] = o.precision;
  return c;
}

// ---- eval ----

struct EvalOptions {
  CommonOptions common;
  std::string function;
  double p = 2.0;
  std::vector<double> x;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const PExponent p(o.p);
  Document doc;
  doc.config = base_config("eval", o.common);
  doc.config["function"] = o.function;
  doc.config["p"] = o.p;
  doc.config["x"] = o.x;
  doc.columns = {"x", "value", "method", "error_estimate"};

  if (auto k = parse_inverse_kind(o.function)) {
    for (double x : o.x) {
      const EvalResult r = inverse(*k, p, x);
      doc.rows.push_back({fixed(x), fixed(r.value), std::string(to_string(r.method)), sci(r.abs_error)});
    }
  } else if (auto f = parse_forward_kind(o.function)) {
    for (double y : o.x) {
      if (*f == ForwardKind::cos_p) {
        doc.rows.push_back({fixed(y), fixed(cos_p(p, y)), std::string("complement"), Cell{}});
        continue;
      }
      InversionResult r;
      PFunctionKind inv = PFunctionKind::arcsin_p;
      switch (*f) {
        case ForwardKind::sin_p: r = sin_p(p, y); break;
        case ForwardKind::tan_p: r = tan_p(p, y); inv = PFunctionKind::arctan_p; break;
        case ForwardKind::sinh_p: r = sinh_p(p, y); inv = PFunctionKind::arsinh_p; break;
        default: r = tanh_p(p, y); inv = PFunctionKind::artanh_p; break;
      }
      // Residual in y carried to x by the slope of the inverse, plus rounding.
      double err = std::numeric_limits<double>::epsilon() * std::abs(r.value);
      const bool unit_domain = inv == PFunctionKind::arcsin_p || inv == PFunctionKind::artanh_p;
      if (!unit_domain || r.value < 1.0) err += r.residual / inverse_derivative(inv, p, r.value);
      doc.rows.push_back({fixed(y), fixed(r.value), std::string("newton_bisection"), sci(err)});
    }
  } else {
    throw DomainError("unknown function '" + o.function +
                      "' (expected arcsin_p, arccos_p, arctan_p, arsinh_p, artanh_p, sin_p, cos_p, tan_p, sinh_p or tanh_p)");
  }
  emit(doc, o.common.spec(), out);
  return kSuccess;
}

// ---- table ----

struct TableOptions {
  CommonOptions common;
  double p = 3.0;
  std::vector<double> grid = kTableGrid;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  const PExponent p(o.p);
  for (double x : o.grid)
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("table: grid values must lie in [0, 1]");

  Document doc;
  doc.config = base_config("table", o.common);
  doc.config["p"] = o.p;
  doc.config["grid"] = o.grid;
  doc.columns = {"x"};
  for (PFunctionKind k : kInverseKinds) doc.columns.emplace_back(to_string(k));
  for (ForwardKind k : kForwardKinds) doc.columns.emplace_back(to_string(k));
  doc.text_blocks = {{0, 1, 2, 3, 4, 5}, {0, 6, 7, 8, 9, 10}};

  for (double x : o.grid) {
    std::vector<Cell> row{fixed(x)};
    for (PFunctionKind k : kInverseKinds) {
      const double v = (k == PFunctionKind::artanh_p && x == 1.0)
                           ? std::numeric_limits<double>::infinity()
                           : inverse(k, p, x).value;
      row.push_back(fixed(v));
    }
    for (ForwardKind k : kForwardKinds) row.push_back(fixed(forward(k, p, x)));
    doc.rows.push_back(std::move(row));
  }
  emit(doc, o.common.spec(), out);
  return kSuccess;
}

// ---- constants ----

struct ConstantsOptions {
  CommonOptions common;
  std::vector<double> p = {2.0};
};

int cmd_constants(const ConstantsOptions& o, std::ostream& out) {
  Document doc;
  doc.config = base_config("constants", o.common);
  doc.config["p"] = o.p;
  doc.columns = {"p", "pi_p", "a_p", "b_p", "c_p", "lambda_1"};
  for (double pv : o.p) {
    const PExponent p(pv);
    const PConstants k = constants(p);
    doc.rows.push_back({automatic(pv), fixed(k.pi_p), fixed(k.a_p), fixed(k.b_p), fixed(k.c_p),
                        automatic(lambda_n(p, 1))});
  }
  emit(doc, o.common.spec(), out);
  return kSuccess;
}

// ---- check ----

struct CheckOptions {
  CommonOptions common;
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
};

std::string point_text(const CheckReport& r) {
  std::string s;
  char buf[64];
  for (std::size_t i = 0; i < r.worst_point.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", r.worst_point[i].second);
    if (i) s += ';';
    s += r.worst_point[i].first + '=' + buf;
  }
  return s;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  std::vector<const InequalityCheck*> selected;
  if (o.ids.empty()) {
    for (const InequalityCheck& c : all_checks()) selected.push_back(&c);
  } else {
    for (const std::string& id : o.ids) {
      const InequalityCheck* c = find_check(id);
      if (!c) throw DomainError("unknown check id '" + id + "'");
      selected.push_back(c);
    }
  }

  Document doc;
  doc.seed = o.seed;
  doc.config = base_config("check", o.common);
  doc.config["ids"] = o.ids;
  doc.columns = {"id",     "expectation", "samples", "violations", "errors", "worst_margin",
                 "worst_point", "status", "description", "diagnostic"};
  bool ok = true;
  for (const InequalityCheck* c : selected) {
    const CheckReport r = run_check(*c, o.seed);
    ok = ok && r.passed();
    doc.rows.push_back({r.id, std::string(to_string(r.expectation)), r.samples, r.violations, r.errors,
                        sci(r.worst_margin), point_text(r), std::string(r.passed() ? "PASS" : "FAIL"),
                        r.description, r.diagnostic});
  }
  emit(doc, o.common.spec(), out);
  return ok ? kSuccess : kVerificationFailure;
}

// ---- verify-eigen ----

struct EigenOptions {
  CommonOptions common;
  double p = 2.0;
  std::int64_t n = 1;
  std::int64_t grid = 4096;
  double lambda_scale = 1.0;
  double threshold = 0.0;  // 0: residual_threshold(grid)
};

int cmd_verify_eigen(const EigenOptions& o, std::ostream& out) {
  const PExponent p(o.p);
  const EigenResidualReport r = residual(p, o.n, o.grid, o.lambda_scale);
  const double threshold = o.threshold > 0.0 ? o.threshold : residual_threshold(o.grid);
  const bool ok = r.max_rel_residual <= threshold;

  Document doc;
  doc.config = base_config("verify-eigen", o.common);
  doc.config["p"] = o.p;
  doc.config["n"] = o.n;
  doc.config["grid"] = o.grid;
  doc.config["lambda_scale"] = o.lambda_scale;
  doc.config["threshold"] = threshold;
  doc.columns = {"p", "n", "grid_size", "step", "lambda", "max_rel_residual", "argmax_t", "u_at_0",
                 "u_at_1", "samples", "interior_nodes", "threshold", "status"};
  doc.rows.push_back({automatic(r.p), r.n, r.grid_size, sci(r.step), automatic(r.lambda),
                      sci(r.max_rel_residual), fixed(r.argmax_t), sci(r.boundary_values.first),
                      sci(r.boundary_values.second), r.samples, r.interior_nodes, sci(threshold),
                      std::string(ok ? "PASS" : "FAIL")});
  emit(doc, o.common.spec(), out);
  return ok ? kSuccess : kVerificationFailure;
}

// ---- explore-conjecture ----

struct ConjectureOptions {
  CommonOptions common;
  std::vector<double> p = {1.5, 2.0, 3.0, 5.0};
  std::vector<double> x = {0.25, 0.5, 0.75};
};

int cmd_explore(const ConjectureOptions& o, std::ostream& out) {
  const std::vector<ConjectureRow> rows = explore_conjecture(o.p, o.x);
  Document doc;
  doc.config = base_config("explore-conjecture", o.common);
  doc.config["p"] = o.p;
  doc.config["x"] = o.x;
  doc.columns = {"function", "x"};
  char buf[48];
  for (double p : o.p) {
    std::snprintf(buf, sizeof buf, "p=%.17g", p);
    doc.columns.emplace_back(buf);
  }
  doc.columns.insert(doc.columns.end(), {"pattern", "monotone", "error"});
  for (const ConjectureRow& r : rows) {
    std::vector<Cell> row{r.function, fixed(r.x)};
    for (std::size_t i = 0; i < o.p.size(); ++i) row.push_back(i < r.values.size() ? fixed(r.values[i]) : Cell{});
    row.push_back(r.pattern);
    row.push_back(r.monotone);
    row.push_back(r.error);
    doc.rows.push_back(std::move(row));
  }
  emit(doc, o.common.spec(), out);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-trigonometric and p-hyperbolic functions: evaluation, tables and verification"};
  app.name("ptrig");
  app.require_subcommand(1);
  app.set_version_flag("--version", PTRIG_VERSION);

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "evaluate one function at a list of points");
  e->add_option("function", eval.function, "arcsin_p ... artanh_p, sin_p ... tanh_p")->required();
  e->add_option("--p", eval.p, "exponent p > 1")->required();
  e->add_option("--x,--grid", eval.x, "comma-separated points")->required()->delimiter(',');
  add_output_options(e, eval.common);

  TableOptions table;
  auto* t = app.add_subcommand("table", "values of all ten functions on a grid in [0, 1]");
  t->add_option("--p", table.p, "exponent p > 1")->capture_default_str();
  t->add_option("--grid,--x", table.grid, "comma-separated points")->delimiter(',');
  add_output_options(t, table.common);

  ConstantsOptions cons;
  auto* c = app.add_subcommand("constants", "pi_p, a_p, b_p, c_p and the first eigenvalue");
  c->add_option("--p", cons.p, "comma-separated exponents")->delimiter(',');
  add_output_options(c, cons.common);

  CheckOptions check;
  auto* k = app.add_subcommand("check", "run the registered inequality checks");
  k->add_option("--ids", check.ids, "comma-separated check ids (default: all)")->delimiter(',');
  k->add_option("--seed", check.seed, "seed for random refinement")->capture_default_str();
  add_output_options(k, check.common);

  EigenOptions eig;
  auto* v = app.add_subcommand("verify-eigen", "finite-difference residual of the p-Laplacian eigenpair");
  v->add_option("--p", eig.p, "exponent p > 1")->required();
  v->add_option("--n", eig.n, "mode number")->capture_default_str();
  v->add_option("--grid", eig.grid, "grid intervals on [0, 1]")->capture_default_str();
  v->add_option("--lambda-scale", eig.lambda_scale, "multiply the eigenvalue (sensitivity runs)")
      ->capture_default_str();
  v->add_option("--threshold", eig.threshold, "pass bound for the residual (default 64 / grid)");
  add_output_options(v, eig.common);

  ConjectureOptions conj;
  auto* x = app.add_subcommand("explore-conjecture", "monotonicity in p of four families (informational)");
  x->add_option("--p", conj.p, "comma-separated exponents")->delimiter(',');
  x->add_option("--x", conj.x, "comma-separated points in (0, 1)")->delimiter(',');
  add_output_options(x, conj.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (e->parsed()) return cmd_eval(eval, out);
    if (t->parsed()) return cmd_table(table, out);
    if (c->parsed()) return cmd_constants(cons, out);
    if (k->parsed()) return cmd_check(check, out);
    if (v->parsed()) return cmd_verify_eigen(eig, out);
    return cmd_explore(conj, out);
  } catch (const DomainError& ex) {
    err << "ptrig: " << ex.what() << '\n';
    return kUsageError;
  } catch (const OverflowError& ex) {
    err << "ptrig: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "ptrig: " << ex.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace ptrig::cli
