// setgen: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 budget or time limit
// exceeded, 3 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setgen/bench.hpp"
#include "setgen/io.hpp"
#include "setgen/setgen.hpp"

namespace {

using namespace setgen;
using nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  double time_limit_s = 60.0;

  std::chrono::milliseconds time_limit() const {
    return std::chrono::milliseconds(static_cast<std::int64_t>(time_limit_s * 1000.0));
  }
  OracleBudget budget() const {
    OracleBudget b = OracleBudget::unlimited();
    b.time_limit = time_limit();
    return b;
  }
};

constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

// Thrown when a run was cut short; the partial result has been printed.
struct Interrupted {};

GenContext load_instance(const std::string& path) {
  auto [g1, g2] = parse_instance(read_file(path));
  return GenContext(std::move(g1), std::move(g2));
}

json literal_pairs(const GenContext& ctx, const PairMapping& phi) {
  json out = json::array();
  phi.pairs().for_each([&](std::size_t i) { out.push_back(ctx.candidate(i).to_string()); });
  return out;
}

json mapping_object(const GenContext& ctx, const PairMapping& phi) {
  return {{"size", phi.size()},
          {"pairs", literal_pairs(ctx, phi)},
          {"indices", mapping_json(ctx, phi)},
          {"renaming", phi.combined().to_string()},
          {"generalization", print_goal(phi.domain(ctx))}};
}

void print_mapping(const GenContext& ctx, const PairMapping& phi) {
  std::string text = phi.to_string(ctx);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  std::cout << text << "\nsize: " << phi.size() << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

struct GeneralizeArgs {
  std::string k = "0", w = "1", estimator = "conflicts", instance;
  bool exhaustive = false, snapshots = false, no_restart = false, scores = false;
};

int cmd_generalize(const Globals& g, const GeneralizeArgs& a) {
  const GenContext ctx = load_instance(a.instance);
  EngineConfig cfg;
  cfg.k = Bound::parse(a.k);
  cfg.w = Bound::parse(a.w);
  if (!cfg.w.is_unbounded() && cfg.w.value() == 0) throw ConfigError("--w must be at least 1");
  cfg.exhaustive_inner = a.exhaustive;
  cfg.estimator = QualityEstimator::by_name(a.estimator);
  cfg.restart = !a.no_restart;
  const auto t0 = std::chrono::steady_clock::now();
  cfg.deadline = t0 + g.time_limit();
  const GeneralizeResult r = kswap_generalize_full(ctx, cfg);
  const double ms = elapsed_ms(t0);

  if (g.json) {
    json out = mapping_object(ctx, r.mapping);
    out["engine"] = cfg.label();
    out["elapsed_ms"] = ms;
    out["interrupted"] = r.stats.interrupted;
    out["select_calls"] = r.stats.select_calls;
    if (a.snapshots) {
      out["snapshots"] = json::array();
      for (const auto& s : r.snapshots) out["snapshots"].push_back(literal_pairs(ctx, s));
    }
    if (a.scores) {
      const auto scores = cfg.estimator.score_all(ctx);
      out["scores"] = json::array();
      for (std::size_t i = 0; i < ctx.size(); ++i)
        out["scores"].push_back({{"pair", ctx.candidate(i).to_string()}, {"score", scores[i]}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (a.scores) {
      const auto scores = cfg.estimator.score_all(ctx);
      for (std::size_t i = 0; i < ctx.size(); ++i) std::cout << "# " << scores[i] << "  " << ctx.candidate(i).to_string() << "\n";
    }
    if (a.snapshots)
      for (std::size_t i = 0; i < r.snapshots.size(); ++i)
        std::cout << "snapshot " << i << ": " << print_goal(r.snapshots[i].domain(ctx)) << "\n";
    print_mapping(ctx, r.mapping);
    std::cout << "engine: " << cfg.label() << "\nelapsed_ms: " << ms << "\n";
    if (r.stats.interrupted) std::cout << "interrupted: time limit reached\n";
  }
  if (r.stats.interrupted) throw Interrupted{};
  return 0;
}

int cmd_mcg(const Globals& g, const std::string& method, bool bounded, const std::string& path) {
  const GenContext ctx = load_instance(path);
  const auto t0 = std::chrono::steady_clock::now();
  PairMapping phi = method == "renamings"
                        ? mcg_by_renamings(ctx, g.budget())
                        : mcg_by_matchings(ctx, g.budget(), bounded ? MatchingSearch::bounded : MatchingSearch::exhaustive);
  const double ms = elapsed_ms(t0);
  if (g.json) {
    json out = mapping_object(ctx, phi);
    out["method"] = method;
    out["elapsed_ms"] = ms;
    std::cout << out.dump(2) << "\n";
  } else {
    print_mapping(ctx, phi);
    std::cout << "method: " << method << "\nelapsed_ms: " << ms << "\n";
  }
  return 0;
}

int cmd_check(const Globals& g, const std::string& k, const std::string& instance, const std::string& mapping) {
  const GenContext ctx = load_instance(instance);
  const PairMapping phi = parse_mapping(ctx, read_file(mapping));
  const StabilityVerdict v = check_kswap_stable(ctx, phi, Bound::parse(k), g.budget());
  if (g.json) {
    json out{{"k", k}, {"size", phi.size()}, {"stable", v.stable()}};
    if (v.extension) out["extension"] = mapping_object(ctx, *v.extension);
    std::cout << out.dump(2) << "\n";
  } else if (v.stable()) {
    std::cout << "stable (k=" << k << ", size " << phi.size() << ")\n";
  } else {
    std::cout << "not stable (k=" << k << "): extension of size " << v.extension->size() << "\n";
    print_mapping(ctx, *v.extension);
  }
  return 0;
}

int cmd_gen(const Globals& g, int class_id, std::size_t count, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  json summary = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig cfg;
    cfg.problem = problem_class(class_id);
    cfg.seed = instance_seed(g.seed, class_id, i);
    const Instance inst = generate_instance(cfg);
    const std::string stem = "class" + std::to_string(class_id) + "_" + std::to_string(i);
    const fs::path text = fs::path(out_dir) / (stem + ".txt");
    write_file(text.string(), format_instance(inst.g1, inst.g2));
    json side = metrics_json(inst.metrics);
    side["class"] = class_id;
    side["seed"] = cfg.seed;
    side["attempts"] = inst.attempts;
    write_file((fs::path(out_dir) / (stem + ".json")).string(), side.dump(2) + "\n");
    side["file"] = text.string();
    summary.push_back(side);
    if (!g.json) std::cout << text.string() << "\n";
  }
  if (g.json) std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_classify(const Globals& g, const std::string& path) {
  const auto [g1, g2] = parse_instance(read_file(path));
  const InstanceMetrics m = instance_metrics(g1, g2, g.budget());
  std::vector<int> classes;
  for (const auto& c : problem_classes())
    if (in_class(m, c)) classes.push_back(c.id);
  if (g.json) {
    json out = metrics_json(m);
    out["classes"] = classes;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "variables: " << m.vars1 << " / " << m.vars2 << "\nliterals: " << m.literals1 << " / " << m.literals2
              << "\nvariable combinations: " << m.var_combinations << "\nliteral matchings: " << m.matchings
              << "\nclasses:";
    if (classes.empty()) std::cout << " none";
    for (int c : classes) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

int cmd_reduce(const Globals& g, const std::string& g1_path, const std::string& g2_path, const std::string& encoding,
               bool decide) {
  const UGraph a = parse_graph(read_file(g1_path)), b = parse_graph(read_file(g2_path));
  const EdgeEncoding enc = encoding == "edges" ? EdgeEncoding::edges_only : EdgeEncoding::induced;
  const auto [g1, g2] = reduce_isip(a, b, enc);
  std::optional<bool> via_mcg, direct;
  if (decide) {
    via_mcg = decide_isip_via_mcg(a, b, g.budget(), enc);
    OracleBudget budget = g.budget();
    direct = enc == EdgeEncoding::induced ? decide_isip_direct(a, b, budget) : decide_subgraph_direct(a, b, budget);
  }
  if (g.json) {
    json out{{"g1", print_goal(g1)}, {"g2", print_goal(g2)}, {"encoding", encoding}};
    if (decide) {
      out["via_mcg"] = *via_mcg;
      out["direct"] = *direct;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_instance(g1, g2);
    if (decide)
      std::cout << "# embeds: " << (*via_mcg ? "yes" : "no") << " (via mcg), " << (*direct ? "yes" : "no")
                << " (direct)\n";
  }
  if (decide && *via_mcg != *direct) {
    std::cerr << "setgen: internal error: reduction and direct decider disagree\n";
    return kExitInternal;
  }
  return 0;
}

struct BenchArgs {
  std::vector<int> classes{1, 2};
  std::size_t per_class = 100;
  std::string format = "text";
  bool serial = false, full = false, renamings = false, no_matchings = false;
  std::size_t workers = 0;
  std::vector<std::string> ks{"0", "2", "4", "inf"};
  std::string w = "1";
};

int cmd_bench(const Globals& g, const BenchArgs& a) {
  BenchPlan plan;
  plan.classes = a.classes;
  plan.per_class = a.per_class;
  plan.seed = g.seed;
  plan.time_limit = g.time_limit();
  plan.run_renamings = a.renamings;
  plan.run_matchings = !a.no_matchings;
  plan.engines.clear();
  for (const auto& k : a.ks) {
    EngineConfig cfg;
    cfg.k = Bound::parse(k);
    cfg.w = Bound::parse(a.w);
    plan.engines.push_back(cfg);
  }
  if (a.full) {
    plan.classes = {1, 2, 3, 4, 5, 6};
    plan.per_class = 1000;
    plan.run_renamings = true;
  }
  std::size_t workers = a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SETGEN_WORKERS")) {
    try {
      workers = std::stoul(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("SETGEN_WORKERS must be a positive integer, got '") + env + "'");
    }
  }
  if (a.serial) workers = 1;
  plan.workers = std::max<std::size_t>(1, workers);

  const BenchReport report = run_bench(plan);
  ReportFormat format = ReportFormat::text;
  if (g.json || a.format == "json") format = ReportFormat::json;
  else if (a.format == "csv") format = ReportFormat::csv;
  std::cout << emit_report(report, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-unification of goals: k-swap stable generalization, exact oracles and benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Base seed for generated instances")->capture_default_str();
  app.add_option("--time-limit", g.time_limit_s, "Time limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  GeneralizeArgs ga;
  auto* gen_cmd = app.add_subcommand("generalize", "Compute a k-swap stable generalization");
  gen_cmd->add_option("--k", ga.k, "Swap bound (integer or inf)")->capture_default_str();
  gen_cmd->add_option("--w", ga.w, "Quality window (integer >= 1 or inf)")->capture_default_str();
  gen_cmd->add_flag("--exhaustive-inner", ga.exhaustive, "Explore every alternative in the swap search");
  gen_cmd->add_flag("--snapshots", ga.snapshots, "Also print every intermediate generalization");
  gen_cmd->add_flag("--no-restart", ga.no_restart, "Continue the anchor pass after an acceptance");
  gen_cmd->add_flag("--scores", ga.scores, "Print the quality score of every candidate pair");
  gen_cmd->add_option("--estimator", ga.estimator, "Quality estimator")->check(CLI::IsMember({"conflicts"}));
  gen_cmd->add_option("instance", ga.instance, "Instance file")->required()->check(CLI::ExistingFile);

  std::string method = "matchings", mcg_instance;
  bool bounded = false;
  auto* mcg_cmd = app.add_subcommand("mcg", "Exact maximal common generalization");
  mcg_cmd->add_option("--method", method, "renamings or matchings")
      ->check(CLI::IsMember({"renamings", "matchings"}))
      ->capture_default_str();
  mcg_cmd->add_flag("--bounded", bounded, "Prune the matchings search by a size bound");
  mcg_cmd->add_option("instance", mcg_instance, "Instance file")->required()->check(CLI::ExistingFile);

  std::string check_k = "1", check_instance, check_mapping;
  auto* check_cmd = app.add_subcommand("check-stability", "Check whether a mapping is k-swap stable");
  check_cmd->add_option("--k", check_k, "Swap bound (integer or inf)")->capture_default_str();
  check_cmd->add_option("instance", check_instance, "Instance file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("mapping", check_mapping, "Mapping file")->required()->check(CLI::ExistingFile);

  int gen_class = 1;
  std::size_t gen_count = 1;
  std::string gen_out = ".";
  auto* gen_inst = app.add_subcommand("gen", "Generate random instances of a problem class");
  gen_inst->add_option("--class", gen_class, "Problem class 1-6")->check(CLI::Range(1, 6))->capture_default_str();
  gen_inst->add_option("--count", gen_count, "Number of instances")->check(CLI::PositiveNumber)->capture_default_str();
  gen_inst->add_option("--out", gen_out, "Output directory")->capture_default_str();

  std::string classify_instance_path;
  auto* classify_cmd = app.add_subcommand("classify", "Report instance metrics and matching classes");
  classify_cmd->add_option("instance", classify_instance_path, "Instance file")->required()->check(CLI::ExistingFile);

  std::string g1_path, g2_path, encoding = "induced";
  bool decide = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Encode two graphs as an anti-unification instance");
  reduce_cmd->add_option("--g1", g1_path, "Pattern graph")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--g2", g2_path, "Target graph")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--encoding", encoding, "induced or edges")
      ->check(CLI::IsMember({"induced", "edges"}))
      ->capture_default_str();
  reduce_cmd->add_flag("--decide", decide, "Also decide the embedding question");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark engines against the exact oracles");
  bench_cmd->add_option("--classes", ba.classes, "Problem classes")->delimiter(',')->check(CLI::Range(1, 6));
  bench_cmd->add_option("--per-class", ba.per_class, "Instances per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--format", ba.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  bench_cmd->add_option("--k", ba.ks, "Swap bounds to benchmark")->delimiter(',');
  bench_cmd->add_option("--w", ba.w, "Quality window")->capture_default_str();
  bench_cmd->add_flag("--serial", ba.serial, "Run one instance at a time (clean timings)");
  bench_cmd->add_flag("--full", ba.full, "All six classes, 1000 instances each, both oracles");
  bench_cmd->add_flag("--renamings", ba.renamings, "Also run the renaming-enumeration oracle");
  bench_cmd->add_flag("--no-matchings", ba.no_matchings, "Skip the matchings oracle");
  bench_cmd->add_option("--workers", ba.workers, "Worker threads (default: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen_cmd) return cmd_generalize(g, ga);
    if (*mcg_cmd) return cmd_mcg(g, method, bounded, mcg_instance);
    if (*check_cmd) return cmd_check(g, check_k, check_instance, check_mapping);
    if (*gen_inst) return cmd_gen(g, gen_class, gen_count, gen_out);
    if (*classify_cmd) return cmd_classify(g, classify_instance_path);
    if (*reduce_cmd) return cmd_reduce(g, g1_path, g2_path, encoding, decide);
    if (*bench_cmd) return cmd_bench(g, ba);
  } catch (const Interrupted&) {
    return kExitBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "setgen: " << e.what() << "\n";
    return kExitBudget;
  } catch (const GenerationExhausted& e) {
    std::cerr << "setgen: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "setgen: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "setgen: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "setgen: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "setgen: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
