// Command-line front end: identity verification suites, quadrature
// diagnostics, Chern-number routes and theorem-hypothesis reports for the
// builtin Hermitian metric families.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "sbsurf/report.hpp"

namespace {

using namespace sbsurf;

struct CommonOpts {
  std::string metric;
  int grid = 24;
  int points = 32;
  std::uint64_t seed = 7;
  int jobs = 0;
  std::string out;
  std::string jet_mode = "analytic";
  double tol_pointwise = -1.0;
  double tol_integral = 1e-4;
};

JetMode parse_mode(const std::string& s) {
  if (s == "analytic") return JetMode::analytic;
  if (s == "fd") return JetMode::fd;
  throw MetricSpecError("unknown jet mode '" + s + "' (use analytic or fd)");
}

double pointwise_tol(const CommonOpts& o) {
  if (o.tol_pointwise > 0) return o.tol_pointwise;
  return parse_mode(o.jet_mode) == JetMode::analytic ? 1e-8 : 1e-5;
}

void print_rows(const std::vector<VerificationReport>& rows) {
  std::printf("%-7s %-28s %12s %12s %10s  %s\n", "id", "metric", "residual", "rel", "tol",
              "status");
  for (const auto& r : rows) {
    const char* status = r.skipped ? "SKIP" : (r.pass ? "pass" : "FAIL");
    std::printf("%-7s %-28s %12.3e %12.3e %10.1e  %s\n", r.id.c_str(), r.metric.c_str(),
                r.abs_residual, r.rel_residual, r.tolerance, status);
  }
}

void write_report(const std::string& path, const Json& config, const Json& results) {
  if (path.empty()) return;
  const Json rep = make_report(config, results);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << dump_report(rep);
}

int summary_exit(const Json& results) {
  for (const auto& row : results)
    if (row.contains("pass") && !(row.contains("skipped") && row["skipped"].get<bool>()) &&
        !row["pass"].get<bool>())
      return 1;
  return 0;
}

Json config_json(const std::string& suite, const CommonOpts& o) {
  Json c;
  c["suite"] = suite;
  c["metric"] = o.metric;
  c["grid"] = o.grid;
  c["points"] = o.points;
  c["seed"] = o.seed;
  c["jet_mode"] = o.jet_mode;
  c["tol_pointwise"] = pointwise_tol(o);
  c["tol_integral"] = o.tol_integral;
  return c;
}

int run_verify(const CommonOpts& o, const std::string& suite) {
  const MetricField m = MetricField::parse(o.metric);
  const JetMode mode = parse_mode(o.jet_mode);

  std::vector<VerificationReport> rows;
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "pointwise" || suite == "all") {
    auto r = verify_pointwise_suite(m, o.points, o.seed, pointwise_tol(o), mode);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  if (suite == "integral" || suite == "all") {
    auto r = verify_integral_suite(m, o.grid, o.tol_integral, o.jobs);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  const auto t1 = std::chrono::steady_clock::now();

  print_rows(rows);
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::fprintf(stderr, "suite runtime: %.1f ms\n", ms);

  Json results = Json::array();
  for (const auto& r : rows) results.push_back(to_json(r));
  write_report(o.out, config_json(suite, o), results);
  return summary_exit(results);
}

int run_integrate(const CommonOpts& o, const std::string& field) {
  const MetricField m = MetricField::parse(o.metric);
  int block = kBVol;
  if (field == "volume") block = kBVol;
  else if (field == "torsion-4") block = kBT4;
  else if (field == "kahler-defect") block = kBDelOmegaSq;
  else if (field == "gauduchon") block = kBGaudSq;
  else throw MetricSpecError("unknown field '" + field +
                             "' (use volume, torsion-4, kahler-defect, gauduchon)");

  const Blocks B = integrate_blocks(m, build_grid(m.chart(), o.grid), o.jobs);
  const Blocks Bc = integrate_blocks(m, build_grid(m.chart(), std::max(4, o.grid / 2)), o.jobs);
  const cplx v = B[block], vc = Bc[block];
  const double err = std::abs(v - vc);
  std::printf("%-14s %-28s grid=%-4d value=%.12g error_estimate=%.3e\n", field.c_str(),
              m.name().c_str(), o.grid, v.real(), err);

  Json row;
  row["id"] = "integral-" + field;
  row["kind"] = "integral-value";
  row["metric"] = m.name();
  row["grid"] = o.grid;
  row["value"] = v.real();
  row["error_estimate"] = err;
  Json results = Json::array({row});
  write_report(o.out, config_json("integrate", o), results);
  return 0;
}

int run_chern(const CommonOpts& o, const std::string& formula) {
  const MetricField m = MetricField::parse(o.metric);
  std::vector<std::string> formulas;
  if (formula == "all")
    formulas = chern_formulas();
  else
    formulas.push_back(formula);

  Json results = Json::array();
  for (const auto& f : formulas) {
    const ChernResult r = chern_number(m, o.grid, f, o.jobs);
    std::printf("chern %-5s %-28s grid=%-4d value=%.10g error_estimate=%.3e\n", f.c_str(),
                m.name().c_str(), o.grid, r.value, r.error_estimate);
    Json row;
    row["id"] = "chern-" + f;
    row["kind"] = "chern";
    row["metric"] = m.name();
    row["grid"] = o.grid;
    row["value"] = r.value;
    row["error_estimate"] = r.error_estimate;
    results.push_back(row);
  }
  write_report(o.out, config_json("chern", o), results);
  return 0;
}

int run_theorem(const CommonOpts& o, const std::string& theorem) {
  const MetricField m = MetricField::parse(o.metric);
  std::vector<std::string> ids;
  if (theorem == "all")
    ids = theorem_ids();
  else
    ids.push_back(theorem);

  Json results = Json::array();
  for (const auto& t : ids) {
    const TheoremReport r = theorem_report(m, o.grid, t, o.jobs);
    std::printf("theorem %-5s %-28s %-16s eig=[%.3e, %.3e] defect=%.6g\n", t.c_str(),
                m.name().c_str(), r.verdict.c_str(), r.eig_min, r.eig_max, r.kahler_defect);
    results.push_back(to_json(r));
  }
  write_report(o.out, config_json("theorem", o), results);
  return 0;
}

int run_estimate_a(const CommonOpts& o) {
  const MetricField m = MetricField::parse(o.metric);
  const double a = estimate_a(m, o.grid, o.jobs);
  std::printf("estimate-a %-28s grid=%-4d a=%.10g\n", m.name().c_str(), o.grid, a);
  Json row;
  row["id"] = "estimate-a";
  row["kind"] = "scalar";
  row["metric"] = m.name();
  row["grid"] = o.grid;
  row["value"] = a;
  Json results = Json::array({row});
  write_report(o.out, config_json("estimate-a", o), results);
  return 0;
}

int run_full_report(const CommonOpts& o) {
  const MetricField m = MetricField::parse(o.metric);
  const JetMode mode = parse_mode(o.jet_mode);

  Json results = Json::array();
  auto pw = verify_pointwise_suite(m, o.points, o.seed, pointwise_tol(o), mode);
  auto in = verify_integral_suite(m, o.grid, o.tol_integral, o.jobs);
  std::vector<VerificationReport> rows;
  rows.insert(rows.end(), pw.begin(), pw.end());
  rows.insert(rows.end(), in.begin(), in.end());
  print_rows(rows);
  for (const auto& r : rows) results.push_back(to_json(r));

  for (const auto& f : chern_formulas()) {
    const ChernResult r = chern_number(m, o.grid, f, o.jobs);
    Json row;
    row["id"] = "chern-" + f;
    row["kind"] = "chern";
    row["metric"] = m.name();
    row["grid"] = o.grid;
    row["value"] = r.value;
    row["error_estimate"] = r.error_estimate;
    results.push_back(row);
  }
  for (const auto& t : theorem_ids()) results.push_back(to_json(theorem_report(m, o.grid, t, o.jobs)));
  {
    Json row;
    row["id"] = "estimate-a";
    row["kind"] = "scalar";
    row["metric"] = m.name();
    row["grid"] = o.grid;
    row["value"] = estimate_a(m, o.grid, o.jobs);
    results.push_back(row);
  }
  write_report(o.out.empty() ? "sbsurf-report.json" : o.out, config_json("report", o), results);
  return summary_exit(results);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_metric = true) {
  auto* m = cmd->add_option("--metric", o.metric,
                            "metric family, e.g. hopf-standard or torus-perturbed:eps=0.1");
  if (needs_metric) m->required();
  cmd->add_option("--grid", o.grid, "per-axis quadrature resolution");
  cmd->add_option("--points", o.points, "number of seeded sample points");
  cmd->add_option("--seed", o.seed, "sample seed");
  cmd->add_option("--jobs", o.jobs, "worker threads (default: cores, or SBSURF_JOBS)");
  cmd->add_option("--out", o.out, "JSON report path");
  cmd->add_option("--jet-mode", o.jet_mode, "analytic or fd")
      ->check(CLI::IsMember({"analytic", "fd"}));
  cmd->add_option("--tol-pointwise", o.tol_pointwise, "pointwise relative tolerance");
  cmd->add_option("--tol-integral", o.tol_integral, "integral relative tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical identity verification on compact Hermitian surface models"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string suite = "all";
  std::string field = "volume";
  std::string formula = "all";
  std::string theorem = "all";

  auto* list = app.add_subcommand("list-metrics", "list builtin metric families");

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify, o);
  verify->add_option("--suite", suite, "pointwise, integral or all")
      ->check(CLI::IsMember({"pointwise", "integral", "all"}));

  auto* integ = app.add_subcommand("integrate", "integrate a named scalar field");
  add_common(integ, o);
  integ->add_option("--field", field, "volume, torsion-4, kahler-defect or gauduchon");

  auto* chern = app.add_subcommand("chern", "evaluate a Chern-number route");
  add_common(chern, o);
  chern->add_option("--formula", formula, "3.23, 4.1, 4.9, 4.17 or all");

  auto* thm = app.add_subcommand("theorem", "theorem-hypothesis diagnostics");
  add_common(thm, o);
  thm->add_option("--theorem", theorem, "1.2, 1.3, 1.4x, 1.4, 1.5, 6.1, 6.2 or all");

  auto* est = app.add_subcommand("estimate-a", "torsion-quadratic bound ratio");
  add_common(est, o);

  auto* rep = app.add_subcommand("report", "full machine-readable report");
  add_common(rep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (list->parsed()) {
      std::printf("torus-flat\n");
      std::printf("torus-perturbed:eps=<0..0.4][,seed=N]\n");
      std::printf("hopf-standard\n");
      std::printf("hopf-conformal:eps=<0..0.5]\n");
      std::printf("fubini-study\n");
      return 0;
    }
    if (verify->parsed()) return run_verify(o, suite);
    if (integ->parsed()) return run_integrate(o, field);
    if (chern->parsed()) return run_chern(o, formula);
    if (thm->parsed()) return run_theorem(o, theorem);
    if (est->parsed()) return run_estimate_a(o);
    if (rep->parsed()) return run_full_report(o);
  } catch (const MetricSpecError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const UnknownIdentityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
