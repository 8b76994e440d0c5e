#pragma once

// Batch benchmark: generate seeded instances per class, time every engine
// configuration and exact oracle on them, and report mean/sd runtime and
// accuracy relative to an mcg.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "setgen/error.hpp"
#include "setgen/instance_gen.hpp"
#include "setgen/kswap.hpp"
#include "setgen/oracles.hpp"

namespace setgen {

inline constexpr int kReportSchemaVersion = 1;

struct BenchPlan {
  std::vector<int> classes{1, 2};
  std::size_t per_class = 100;
  std::vector<EngineConfig> engines = default_engines();
  bool run_renamings = false;
  bool run_matchings = true;
  std::uint64_t seed = 1;
  std::chrono::milliseconds time_limit{60'000};
  OracleBudget budget = OracleBudget::unlimited();
  std::size_t workers = 1;

  // k in {0, 2, 4, inf}, W = 1.
  static std::vector<EngineConfig> default_engines() {
    std::vector<EngineConfig> out;
    for (Bound k : {Bound(0), Bound(2), Bound(4), Bound::unbounded()}) {
      EngineConfig c;
      c.k = k;
      c.w = Bound(1);
      out.push_back(c);
    }
    return out;
  }

  void validate() const {
    if (per_class < 1) throw ConfigError("bench plan needs at least one instance per class");
    if (engines.empty()) throw ConfigError("bench plan needs at least one engine");
    if (classes.empty()) throw ConfigError("bench plan needs at least one class");
    for (int c : classes) problem_class(c);
  }
};

struct BenchRow {
  int problem_class = 0;
  std::string engine;
  double mean_ms = 0;
  double sd_ms = 0;
  double mean_accuracy = 0;  // percent of the mcg size
  double sd_accuracy = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> warnings;

  const BenchRow* find(int problem_class, const std::string& engine) const {
    for (const auto& r : rows)
      if (r.problem_class == problem_class && r.engine == engine) return &r;
    return nullptr;
  }

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Per-instance measurements.
struct RunRecord {
  double ms = 0;
  std::optional<std::size_t> size;  // empty on timeout / budget failure
};

struct InstanceRecord {
  std::vector<RunRecord> engines;
  std::optional<RunRecord> renamings;
  std::optional<RunRecord> matchings;
  bool generated = false;
};

inline double accuracy_percent(std::size_t size, std::size_t mcg_size) {
  if (mcg_size == 0) return 100.0;
  return 100.0 * static_cast<double>(size) / static_cast<double>(mcg_size);
}

namespace detail {

struct Summary {
  double mean = 0, sd = 0;
};

inline Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  double sum = 0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0;
    for (double x : xs) sq += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return s;
}

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline InstanceRecord run_instance(const BenchPlan& plan, int class_id, std::size_t index) {
  InstanceRecord rec;
  GeneratorConfig gen;
  gen.problem = problem_class(class_id);
  gen.seed = instance_seed(plan.seed, class_id, index);
  Instance inst;
  try {
    inst = generate_instance(gen);
  } catch (const GenerationExhausted&) {
    return rec;
  }
  rec.generated = true;
  const GenContext ctx(inst.g1, inst.g2);

  OracleBudget budget = plan.budget;
  budget.time_limit = plan.time_limit;
  auto run_oracle = [&](auto&& oracle) {
    RunRecord r;
    std::optional<PairMapping> out;
    r.ms = time_ms([&] {
      try {
        out = oracle(ctx, budget);
      } catch (const BudgetExceeded&) {
      }
    });
    if (out) r.size = out->size();
    return r;
  };
  if (plan.run_matchings) rec.matchings = run_oracle([](const auto& c, const auto& b) { return mcg_by_matchings(c, b); });
  if (plan.run_renamings) rec.renamings = run_oracle([](const auto& c, const auto& b) { return mcg_by_renamings(c, b); });

  for (const EngineConfig& base : plan.engines) {
    EngineConfig cfg = base;
    RunRecord r;
    std::optional<GeneralizeResult> out;
    r.ms = time_ms([&] {
      cfg.deadline = std::chrono::steady_clock::now() + plan.time_limit;
      out = kswap_generalize_full(ctx, cfg);
    });
    if (!out->stats.interrupted) r.size = out->mapping.size();
    rec.engines.push_back(r);
  }
  return rec;
}

}  // namespace detail

// Runs every (class, instance) job, in parallel when plan.workers > 1.
inline std::vector<std::vector<InstanceRecord>> run_bench_records(const BenchPlan& plan) {
  plan.validate();
  struct Job {
    std::size_t class_slot, index;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < plan.classes.size(); ++c)
    for (std::size_t i = 0; i < plan.per_class; ++i) jobs.push_back({c, i});

  std::vector<std::vector<InstanceRecord>> records(plan.classes.size(), std::vector<InstanceRecord>(plan.per_class));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++)
      records[jobs[j].class_slot][jobs[j].index] =
          detail::run_instance(plan, plan.classes[jobs[j].class_slot], jobs[j].index);
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(plan.workers, jobs.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return records;
}

inline BenchReport summarize_bench(const BenchPlan& plan, const std::vector<std::vector<InstanceRecord>>& records) {
  BenchReport report;
  for (std::size_t c = 0; c < plan.classes.size(); ++c) {
    const int class_id = plan.classes[c];
    const auto& recs = records[c];

    // Reference mcg size: the matchings oracle when run, else renamings.
    auto reference = [&](const InstanceRecord& r) -> std::optional<std::size_t> {
      if (r.matchings && r.matchings->size) return r.matchings->size;
      if (r.renamings && r.renamings->size) return r.renamings->size;
      return std::nullopt;
    };

    auto add_row = [&](const std::string& label, auto&& pick) {
      BenchRow row;
      row.problem_class = class_id;
      row.engine = label;
      std::vector<double> ms, acc;
      for (const auto& r : recs) {
        ++row.instances;
        const RunRecord* run = r.generated ? pick(r) : nullptr;
        if (!run || !run->size) {
          ++row.failures;
          continue;
        }
        ms.push_back(run->ms);
        if (auto ref = reference(r)) acc.push_back(accuracy_percent(*run->size, *ref));
      }
      const auto t = detail::summarize(ms);
      const auto a = detail::summarize(acc);
      row.mean_ms = t.mean;
      row.sd_ms = t.sd;
      row.mean_accuracy = a.mean;
      row.sd_accuracy = a.sd;
      report.rows.push_back(row);
    };

    if (plan.run_renamings)
      add_row("mcg_ER", [](const InstanceRecord& r) { return r.renamings ? &*r.renamings : nullptr; });
    if (plan.run_matchings)
      add_row("mcg_EG", [](const InstanceRecord& r) { return r.matchings ? &*r.matchings : nullptr; });
    for (std::size_t e = 0; e < plan.engines.size(); ++e)
      add_row(plan.engines[e].label(), [e](const InstanceRecord& r) { return &r.engines[e]; });

    // Soft check: accuracy should not drop as k grows (same W, same mode).
    for (std::size_t a = 0; a < plan.engines.size(); ++a)
      for (std::size_t b = 0; b < plan.engines.size(); ++b) {
        const auto &ea = plan.engines[a], &eb = plan.engines[b];
        if (ea.w != eb.w || ea.exhaustive_inner != eb.exhaustive_inner || !(ea.k.value() < eb.k.value())) continue;
        const BenchRow* ra = report.find(class_id, ea.label());
        const BenchRow* rb = report.find(class_id, eb.label());
        if (ra && rb && rb->mean_accuracy + 1.0 < ra->mean_accuracy) {
          std::ostringstream w;
          w << std::fixed << std::setprecision(2) << "class " << class_id << ": mean accuracy of " << eb.label() << " ("
            << rb->mean_accuracy << "%) is below " << ea.label() << " (" << ra->mean_accuracy << "%)";
          report.warnings.push_back(w.str());
        }
      }
  }
  return report;
}

inline BenchReport run_bench(const BenchPlan& plan) { return summarize_bench(plan, run_bench_records(plan)); }

// ---------------------------------------------------------------------------
// Report emission

enum class ReportFormat { text, json, csv };

inline nlohmann::json report_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"class", r.problem_class},
                    {"engine", r.engine},
                    {"mean_ms", r.mean_ms},
                    {"sd_ms", r.sd_ms},
                    {"mean_accuracy", r.mean_accuracy},
                    {"sd_accuracy", r.sd_accuracy},
                    {"instances", r.instances},
                    {"failures", r.failures}});
  return {{"schema_version", kReportSchemaVersion}, {"rows", rows}, {"warnings", report.warnings}};
}

inline BenchReport parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw Error("unsupported report schema version " + j.at("schema_version").dump());
  BenchReport report;
  for (const auto& r : j.at("rows")) {
    BenchRow row;
    row.problem_class = r.at("class").get<int>();
    row.engine = r.at("engine").get<std::string>();
    row.mean_ms = r.at("mean_ms").get<double>();
    row.sd_ms = r.at("sd_ms").get<double>();
    row.mean_accuracy = r.at("mean_accuracy").get<double>();
    row.sd_accuracy = r.at("sd_accuracy").get<double>();
    row.instances = r.at("instances").get<std::size_t>();
    row.failures = r.at("failures").get<std::size_t>();
    report.rows.push_back(std::move(row));
  }
  report.warnings = j.at("warnings").get<std::vector<std::string>>();
  return report;
}

inline std::string emit_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_json(report).dump(2) + "\n";

  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "class,engine,mean_ms,sd_ms,mean_pct,sd_pct,instances,failures\n";
    out << std::setprecision(6);
    for (const auto& r : report.rows)
      out << r.problem_class << ",\"" << r.engine << "\"," << r.mean_ms << "," << r.sd_ms << "," << r.mean_accuracy
          << "," << r.sd_accuracy << "," << r.instances << "," << r.failures << "\n";
    return out.str();
  }

  out << std::left << std::setw(6) << "class" << std::setw(22) << "engine" << std::right << std::setw(12) << "mean ms"
      << std::setw(12) << "sd ms" << std::setw(10) << "mean %" << std::setw(10) << "sd %" << std::setw(8) << "n"
      << std::setw(8) << "fail" << "\n";
  out << std::fixed;
  for (const auto& r : report.rows)
    out << std::left << std::setw(6) << r.problem_class << std::setw(22) << r.engine << std::right
        << std::setprecision(3) << std::setw(12) << r.mean_ms << std::setw(12) << r.sd_ms << std::setprecision(1)
        << std::setw(10) << r.mean_accuracy << std::setw(10) << r.sd_accuracy << std::setw(8) << r.instances
        << std::setw(8) << r.failures << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace setgen
