#ifndef FCIT_BENCH_HPP
#define FCIT_BENCH_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fcit/problem.hpp"
#include "fcit/stats.hpp"

namespace fcit {

inline const std::vector<std::string> kPlannerNames = {"fcit", "fcit-rdisc", "rrtc", "rrtstar"};

/// Dispatches on planner name; unknown names throw ContractViolation.
/// fcit-rdisc defaults its radius to half the bounds diameter when unset.
PlanResult run_planner(const std::string& planner, const ProblemDef& problem,
                       const PlannerSettings& settings);

/// One trial's outcome. Unsolved trials carry infinite times and costs.
struct TrialRecord {
  std::string suite;
  std::string problem;
  std::string planner;
  int trial = 0;
  std::uint64_t seed = 0;
  bool solved = false;
  double t_init_ms = kInf;
  double c_init = kInf;
  double t_final_ms = kInf;
  double c_final = kInf;
  long long edges_validated = 0;
  long long states_checked = 0;
  long long batches = 0;
};

struct TraceRow {
  std::string suite;
  std::string problem;
  std::string planner;
  int trial = 0;
  double t_ms = 0.0;
  double cost = kInf;
};

/// A benchmark suite: problem files plus the repetition protocol.
struct SuiteManifest {
  std::string name;
  std::vector<std::filesystem::path> problem_paths;
  double time_budget_s = 1.0;
  int trials = 5;
  std::uint64_t seed_base = 0;
};

/// Loads a manifest and checks that every referenced problem file exists.
SuiteManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const SuiteManifest& manifest, const std::filesystem::path& path);

/// Stable per-trial seed: unique across the suite and identical across reruns.
std::uint64_t trial_seed(std::uint64_t seed_base, const std::string& problem,
                         const std::string& planner, int trial);

struct SuiteRun {
  std::vector<TrialRecord> records;
  std::vector<TraceRow> traces;
};

/// Runs trials x problems x planners. The settings template supplies every
/// knob except the seed, which is derived per trial. Individual trial
/// failures are recorded as unsolved, never aborting the suite.
SuiteRun run_suite(const SuiteManifest& manifest, const std::vector<std::string>& planners,
                   const PlannerSettings& settings_template);

// Fixed CSV schemas. Readers reject unknown columns; rows that do not parse
// report their row number.
extern const char* const kRecordsCsvHeader;
extern const char* const kTraceCsvHeader;

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> parse_records_csv(const std::string& text);
std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path);
void write_records_csv(const std::vector<TrialRecord>& records, const std::filesystem::path& path);

std::string traces_to_csv(const std::vector<TraceRow>& traces);
void write_trace_csv(const std::vector<TraceRow>& traces, const std::filesystem::path& path);

/// Table I-style aggregate for one (planner, suite) pair: solve fraction
/// with an exact binomial interval and order-statistic medians for initial
/// solution time and cost.
struct SummaryRow {
  std::string planner;
  std::string suite;
  long long solved = 0;
  long long total = 0;
  double frac = 0.0;
  double frac_lo = 0.0;
  double frac_hi = 0.0;
  MedianCi t_init{};
  MedianCi c_init{};
};

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, double alpha = 0.01);
std::string format_summary_table(const std::vector<SummaryRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

/// Shortest round-trip decimal form; infinities render as "inf".
std::string format_double(double v);
double parse_double_field(const std::string& s);

}  // namespace fcit

#endif  // FCIT_BENCH_HPP
