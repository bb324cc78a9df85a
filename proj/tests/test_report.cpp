#include <doctest.h>

#include "sbsurf/report.hpp"

using namespace sbsurf;

TEST_CASE("report json is key-stable and summary counts are right") {
  VerificationReport a;
  a.id = "PW-01";
  a.kind = "pointwise-form";
  a.metric = "torus-flat";
  a.points = 8;
  a.seed = 7;
  a.pass = true;
  VerificationReport b = a;
  b.id = "PW-22";
  b.pass = false;
  b.skipped = true;
  b.skip_reason = "inapplicable: metric is not Gauduchon";
  VerificationReport c = a;
  c.id = "IN-01";
  c.kind = "integral";
  c.pass = false;

  Json rows = Json::array({to_json(a), to_json(b), to_json(c)});
  Json config = {{"suite", "all"}, {"metric", "torus-flat"}};
  const Json rep = make_report(config, rows);
  CHECK(rep["summary"]["pass"] == 1);
  CHECK(rep["summary"]["fail"] == 1);
  CHECK(rep["summary"]["skipped"] == 1);
  CHECK(rep["tool_version"] == kToolVersion);
  CHECK(rep["results"][1]["skip_reason"].get<std::string>().find("Gauduchon") !=
        std::string::npos);

  const std::string once = dump_report(rep);
  const std::string twice = dump_report(make_report(config, rows));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
}

TEST_CASE("verification reports serialize deterministically end to end") {
  const MetricField m = MetricField::hopf_standard();
  auto run = [&]() {
    Json rows = Json::array();
    for (const auto& r : verify_pointwise_suite(m, 6, 3, 1e-8)) rows.push_back(to_json(r));
    return dump_report(make_report({{"metric", m.name()}}, rows));
  };
  CHECK(run() == run());
}
