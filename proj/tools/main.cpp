#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcit/bench.hpp"
#include "fcit/problem_io.hpp"
#include "fcit/suites.hpp"

namespace {

namespace fs = std::filesystem;

struct SettingsFlags {
  double time = 0.0;
  int batches = 0;
  double target = 0.0;
  int batch_size = 100;
  std::uint64_t seed = 0;
  double radius = 0.0;
  double resolution = fcit::kDefaultResolution;
  int block_width = fcit::kDefaultBlockWidth;
  std::string sampler = "pseudorandom";
  double rrt_range = 0.5;
  double rewire_factor = 1.1;
  int shortcut_iters = 100;
};

void add_settings_flags(CLI::App* cmd, SettingsFlags& f) {
  cmd->add_option("--time", f.time, "Time budget in seconds");
  cmd->add_option("--batches", f.batches, "Batch budget (alternative to --time)");
  cmd->add_option("--target", f.target, "Stop once the solution cost reaches this value");
  cmd->add_option("--batch-size", f.batch_size, "Samples added per batch")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Random seed / suite seed base")->capture_default_str();
  cmd->add_option("--radius", f.radius, "Connection radius for fcit-rdisc");
  cmd->add_option("--resolution", f.resolution, "Motion validation resolution")->capture_default_str();
  cmd->add_option("--block-width", f.block_width, "Validation lanes per block (power of two)")
      ->capture_default_str();
  cmd->add_option("--sampler", f.sampler, "Sampler kind")
      ->check(CLI::IsMember({"pseudorandom", "halton"}))
      ->capture_default_str();
  cmd->add_option("--rrt-range", f.rrt_range, "RRT extension range")->capture_default_str();
  cmd->add_option("--rewire-factor", f.rewire_factor, "RRT* neighborhood scale")->capture_default_str();
  cmd->add_option("--shortcut-iters", f.shortcut_iters, "Shortcutting iterations for rrtc")
      ->capture_default_str();
}

fcit::PlannerSettings to_settings(const SettingsFlags& f, double default_time) {
  fcit::PlannerSettings s;
  if (f.batches > 0) {
    s.max_batches = f.batches;
  } else if (f.target > 0.0) {
    s.target_cost = f.target;
  } else {
    s.time_budget_s = f.time > 0.0 ? f.time : default_time;
  }
  s.batch_size = f.batch_size;
  s.seed = f.seed;
  if (f.radius > 0.0) s.rdisc_radius = f.radius;
  s.resolution = f.resolution;
  s.block_width = f.block_width;
  s.sampler = f.sampler == "halton" ? fcit::SamplerKind::kHalton : fcit::SamplerKind::kPseudorandom;
  s.rrt_range = f.rrt_range;
  s.rewire_factor = f.rewire_factor;
  s.shortcut_iterations = f.shortcut_iters;
  return s;
}

void write_run_meta(const fs::path& dir, int argc, char** argv) {
  // Wall-clock metadata lives here so the records CSV stays reproducible.
  nlohmann::json meta;
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  meta["command"] = cmd;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&now));
  meta["timestamp"] = stamp;
  std::ofstream out(dir / "run_meta.json");
  out << meta.dump(2) << "\n";
}

int run_plan(const std::string& problem_path, const std::string& planner, const SettingsFlags& flags,
             const std::string& out_dir) {
  const fcit::ProblemDef problem = fcit::load_problem(problem_path);
  const fcit::PlannerSettings settings = to_settings(flags, 1.0);
  const fcit::PlanResult result = fcit::run_planner(planner, problem, settings);

  std::printf("problem: %s  planner: %s\n", problem.name.c_str(), planner.c_str());
  if (result.solved) {
    std::printf("solved: yes  cost: %s\n", fcit::format_double(result.cost).c_str());
    std::printf("initial: %.3f ms (cost %s)  final improvement at %.3f ms\n", result.initial_time_ms,
                fcit::format_double(result.initial_cost).c_str(), result.final_time_ms);
  } else {
    std::printf("solved: no%s\n", result.note.empty() ? "" : ("  (" + result.note + ")").c_str());
  }
  std::printf("batches: %lld  pops: %lld  edges validated: %lld  states checked: %lld\n",
              result.counters.batches, result.counters.queue_pops, result.counters.edges_validated,
              result.counters.states_checked);
  std::printf("path states: %zu\n", result.path.size());

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::vector<fcit::TraceRow> traces;
    for (const auto& ev : result.trace) {
      traces.push_back({"adhoc", problem.name, planner, 0, ev.t_ms, ev.cost});
    }
    fcit::write_trace_csv(traces, fs::path(out_dir) / "trace.csv");
  }
  return 0;
}

int run_bench(const std::string& manifest_path, std::vector<std::string> planners,
              const SettingsFlags& flags, int trials_override, const std::string& out_dir, int argc,
              char** argv) {
  fcit::SuiteManifest manifest = fcit::load_manifest(manifest_path);
  if (trials_override > 0) manifest.trials = trials_override;
  if (flags.seed != 0) manifest.seed_base = flags.seed;
  if (planners.empty()) planners = {"fcit"};
  const fcit::PlannerSettings settings = to_settings(flags, manifest.time_budget_s);

  const fcit::SuiteRun run = fcit::run_suite(manifest, planners, settings);
  fs::create_directories(out_dir);
  fcit::write_records_csv(run.records, fs::path(out_dir) / "records.csv");
  fcit::write_trace_csv(run.traces, fs::path(out_dir) / "trace.csv");
  write_run_meta(out_dir, argc, argv);
  std::printf("wrote %zu records and %zu trace rows to %s\n", run.records.size(), run.traces.size(),
              out_dir.c_str());
  return 0;
}

int run_summarize(const std::string& records_path, const std::string& out_dir) {
  const auto records = fcit::read_records_csv(records_path);
  const auto rows = fcit::summarize(records);
  std::fputs(fcit::format_summary_table(rows).c_str(), stdout);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream out(fs::path(out_dir) / "summary.csv");
    if (!out) throw fcit::IoError("cannot write summary.csv under " + out_dir);
    out << fcit::summary_to_csv(rows);
  }
  return 0;
}

int run_gen(const std::string& suite, const std::string& out_dir, int count, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = fcit::kBuiltinSuites;
  } else {
    names = {suite};
  }
  for (const std::string& name : names) {
    const auto manifest = fcit::generate_suite(name, out_dir, count, seed);
    std::printf("generated suite %s -> %s\n", name.c_str(), manifest.string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-based motion planning benchmarks (FCIT* and baselines)"};
  app.require_subcommand(1);

  SettingsFlags flags;

  auto* plan = app.add_subcommand("plan", "Run one planner on one problem");
  std::string problem_path;
  std::string planner = "fcit";
  std::string out_dir;
  plan->add_option("--problem", problem_path, "Problem JSON file")->required();
  plan->add_option("--planner", planner, "Planner")
      ->check(CLI::IsMember(fcit::kPlannerNames))
      ->capture_default_str();
  plan->add_option("--out", out_dir, "Directory for the trace CSV");
  add_settings_flags(plan, flags);

  auto* bench = app.add_subcommand("bench", "Run a suite manifest");
  std::string manifest_path;
  std::vector<std::string> planners;
  std::string bench_out = "bench-out";
  int trials_override = 0;
  bench->add_option("--suite", manifest_path, "Suite manifest JSON")->required();
  bench->add_option("--planner", planners, "Planner(s) to run")
      ->check(CLI::IsMember(fcit::kPlannerNames));
  bench->add_option("--trials", trials_override, "Override trials per problem");
  bench->add_option("--out", bench_out, "Output directory")->capture_default_str();
  add_settings_flags(bench, flags);

  auto* summarize = app.add_subcommand("summarize", "Summarize a records CSV");
  std::string records_path;
  std::string summary_out;
  summarize->add_option("records", records_path, "records.csv path")->required();
  summarize->add_option("--out", summary_out, "Directory for summary.csv");

  auto* gen = app.add_subcommand("gen", "Generate built-in problem suites");
  std::string gen_suite = "all";
  std::string gen_out = "suites";
  int gen_count = 10;
  std::uint64_t gen_seed = 20240901;
  std::vector<std::string> gen_choices = fcit::kBuiltinSuites;
  gen_choices.push_back("all");
  gen->add_option("--suite", gen_suite, "Suite name")
      ->check(CLI::IsMember(gen_choices))
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->capture_default_str();
  gen->add_option("--count", gen_count, "Problems per suite")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (plan->parsed()) return run_plan(problem_path, planner, flags, out_dir);
    if (bench->parsed())
      return run_bench(manifest_path, planners, flags, trials_override, bench_out, argc, argv);
    if (summarize->parsed()) return run_summarize(records_path, summary_out);
    if (gen->parsed()) return run_gen(gen_suite, gen_out, gen_count, gen_seed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const fcit::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const fcit::SemanticError& e) {
    std::fprintf(stderr, "semantic error: %s\n", e.what());
    return 3;
  } catch (const fcit::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  } catch (const fcit::ContractViolation& e) {
    std::fprintf(stderr, "invalid request: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
