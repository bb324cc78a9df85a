#include "sbsurf/report.hpp"

namespace sbsurf {

Json to_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["metric"] = r.metric;
  if (r.points > 0) {
    j["points"] = r.points;
    j["seed"] = r.seed;
  }
  if (r.grid > 0) j["grid"] = r.grid;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_residual"] = r.abs_residual;
  j["rel_residual"] = r.rel_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["skipped"] = r.skipped;
  if (r.skipped) j["skip_reason"] = r.skip_reason;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["id"] = "theorem-" + r.theorem;
  j["kind"] = "theorem";
  j["metric"] = r.metric;
  j["grid"] = r.grid;
  j["cric20_max"] = r.ric20_max;
  j["gauduchon_max"] = r.gauduchon_max;
  j["parallel_torsion_residual"] = r.parallel_residual;
  j["kahler_defect"] = r.kahler_defect;
  if (r.theorem == "6.1" || r.theorem == "6.2") j["a_estimate"] = r.a_estimate;
  j["eig_min"] = r.eig_min;
  j["eig_max"] = r.eig_max;
  if (!r.option_ranges.empty()) {
    Json opts = Json::array();
    for (const auto& [lo, hi] : r.option_ranges) opts.push_back({{"min", lo}, {"max", hi}});
    j["option_ranges"] = opts;
  }
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["verdict"] = r.verdict;
  j["flags"] = r.flags;
  return j;
}

Json make_report(const Json& config, const Json& results) {
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& row : results) {
    if (row.contains("skipped") && row["skipped"].get<bool>()) {
      ++skipped;
    } else if (row.contains("pass")) {
      row["pass"].get<bool>() ? ++pass : ++fail;
    }
  }
  Json j;
  j["tool_version"] = kToolVersion;
  j["config"] = config;
  j["results"] = results;
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace sbsurf
