#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "setgen/bench.hpp"

using namespace setgen;

namespace {

BenchPlan small_plan() {
  BenchPlan plan;
  plan.classes = {1};
  plan.per_class = 4;
  plan.run_renamings = true;
  plan.seed = 5;
  return plan;
}

}  // namespace

TEST_CASE("plan validation", "[bench]") {
  BenchPlan plan;
  CHECK_NOTHROW(plan.validate());
  CHECK(plan.engines.size() == 4);
  plan.engines.clear();
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = BenchPlan{};
  plan.per_class = 0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan = BenchPlan{};
  plan.classes = {9};
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  CHECK_THROWS_AS(run_bench(plan), ConfigError);
}

TEST_CASE("summary statistics", "[bench]") {
  const auto s = detail::summarize({1.0, 2.0, 3.0});
  CHECK(s.mean == Catch::Approx(2.0));
  CHECK(s.sd == Catch::Approx(1.0));
  CHECK(detail::summarize({4.0}).sd == 0.0);
  CHECK(accuracy_percent(3, 4) == Catch::Approx(75.0));
  CHECK(accuracy_percent(0, 0) == 100.0);
}

TEST_CASE("bench runs are deterministic apart from timings", "[bench]") {
  BenchPlan serial = small_plan();
  BenchPlan parallel = small_plan();
  parallel.workers = 4;
  const auto a = run_bench_records(serial), b = run_bench_records(parallel);
  REQUIRE(a.size() == 1);
  REQUIRE(a[0].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(a[0][i].generated);
    CHECK(a[0][i].matchings->size == b[0][i].matchings->size);
    CHECK(a[0][i].renamings->size == a[0][i].matchings->size);
    for (std::size_t e = 0; e < serial.engines.size(); ++e) {
      CHECK(a[0][i].engines[e].size == b[0][i].engines[e].size);
      CHECK(a[0][i].engines[e].size <= a[0][i].matchings->size);
    }
  }
  const BenchReport report = summarize_bench(serial, a);
  REQUIRE(report.rows.size() == 2 + serial.engines.size());
  CHECK(report.rows[0].engine == "mcg_ER");
  CHECK(report.rows[1].engine == "mcg_EG");
  CHECK(report.rows[1].mean_accuracy == Catch::Approx(100.0));
  for (const auto& row : report.rows) {
    CHECK(row.instances == 4);
    CHECK(row.failures == 0);
    CHECK(row.mean_accuracy <= 100.0);
  }
  CHECK(report.find(1, "k=inf,w=1") != nullptr);
  CHECK(report.find(2, "k=inf,w=1") == nullptr);
}

TEST_CASE("accuracy drops with k are flagged", "[bench]") {
  BenchPlan plan = small_plan();
  plan.per_class = 1;
  plan.run_renamings = false;
  plan.engines = {BenchPlan::default_engines()[0], BenchPlan::default_engines()[3]};
  std::vector<std::vector<InstanceRecord>> records(1, std::vector<InstanceRecord>(1));
  auto& rec = records[0][0];
  rec.generated = true;
  rec.matchings = RunRecord{1.0, 10};
  rec.engines = {RunRecord{1.0, 10}, RunRecord{1.0, 8}};
  const auto report = summarize_bench(plan, records);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("k=inf,w=1") != std::string::npos);
}

TEST_CASE("report formats", "[bench]") {
  SECTION("empty report prints only the header") {
    const std::string text = emit_report(BenchReport{}, ReportFormat::text);
    CHECK(text.find("engine") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  }
  BenchReport report;
  report.rows.push_back({2, "k=4,w=1", 1.5, 0.25, 99.5, 1.0, 100, 0});
  report.warnings.push_back("something odd");
  SECTION("text") {
    const std::string text = emit_report(report, ReportFormat::text);
    CHECK(text.find("k=4,w=1") != std::string::npos);
    CHECK(text.find("99.5") != std::string::npos);
    CHECK(text.find("warning: something odd") != std::string::npos);
  }
  SECTION("json round trip") {
    CHECK(parse_report_json(emit_report(report, ReportFormat::json)) == report);
    auto j = report_json(report);
    j["schema_version"] = 99;
    CHECK_THROWS_AS(parse_report_json(j.dump()), Error);
  }
  SECTION("csv") {
    const std::string csv = emit_report(report, ReportFormat::csv);
    CHECK(csv == "class,engine,mean_ms,sd_ms,mean_pct,sd_pct,instances,failures\n2,\"k=4,w=1\",1.5,0.25,99.5,1,100,0\n");
  }
}
