#include "fcit/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "fcit/fcit_planner.hpp"
#include "fcit/problem_io.hpp"
#include "fcit/rrt.hpp"

namespace fcit {

const char* const kRecordsCsvHeader =
    "suite,problem,planner,trial,seed,solved,t_init_ms,c_init,t_final_ms,c_final,"
    "edges_validated,states_checked,batches";
const char* const kTraceCsvHeader = "suite,problem,planner,trial,t_ms,cost";

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double_field(const std::string& s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("bad numeric field: \"" + s + "\"");
  }
  return v;
}

PlanResult run_planner(const std::string& planner, const ProblemDef& problem,
                       const PlannerSettings& settings) {
  if (planner == "fcit") return fcit_plan(problem, settings);
  if (planner == "fcit-rdisc") {
    PlannerSettings s = settings;
    if (!s.rdisc_radius) s.rdisc_radius = problem.bounds.diameter() / 2.0;
    return fcit_plan_rdisc(problem, s);
  }
  if (planner == "rrtc") return rrt_connect(problem, settings);
  if (planner == "rrtstar") return rrt_star(problem, settings);
  throw ContractViolation("unknown planner: \"" + planner + "\"");
}

SuiteManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  SuiteManifest m;
  if (!doc.is_object()) throw ParseError(path.string() + ": top level must be an object");
  m.name = doc.value("name", path.stem().string());
  if (!doc.contains("problems") || !doc["problems"].is_array() || doc["problems"].empty()) {
    throw ParseError(path.string() + ": \"problems\" must be a non-empty array of paths");
  }
  const auto base = path.parent_path();
  for (const auto& jp : doc["problems"]) {
    if (!jp.is_string()) throw ParseError(path.string() + ": problem paths must be strings");
    std::filesystem::path p = jp.get<std::string>();
    if (p.is_relative()) p = base / p;
    if (!std::filesystem::exists(p)) {
      throw SemanticError(path.string() + ": referenced problem file does not exist: " + p.string());
    }
    m.problem_paths.push_back(std::move(p));
  }
  m.time_budget_s = doc.value("time_budget_s", 1.0);
  m.trials = doc.value("trials", 5);
  m.seed_base = doc.value("seed_base", std::uint64_t{0});
  if (m.trials < 1) throw SemanticError(path.string() + ": trials must be >= 1");
  if (!(m.time_budget_s > 0.0)) throw SemanticError(path.string() + ": time budget must be > 0");
  return m;
}

void save_manifest(const SuiteManifest& manifest, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["name"] = manifest.name;
  doc["problems"] = nlohmann::json::array();
  const auto base = path.parent_path();
  for (const auto& p : manifest.problem_paths) {
    doc["problems"].push_back(p.lexically_relative(base).generic_string());
  }
  doc["time_budget_s"] = manifest.time_budget_s;
  doc["trials"] = manifest.trials;
  doc["seed_base"] = manifest.seed_base;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << doc.dump(2) << "\n";
}

std::uint64_t trial_seed(std::uint64_t seed_base, const std::string& problem,
                         const std::string& planner, int trial) {
  std::uint64_t h = fnv1a64(problem);
  h = fnv1a64("|", h);
  h = fnv1a64(planner, h);
  h = fnv1a64("|", h);
  h = fnv1a64(std::to_string(trial), h);
  return mix64(seed_base ^ h);
}

SuiteRun run_suite(const SuiteManifest& manifest, const std::vector<std::string>& planners,
                   const PlannerSettings& settings_template) {
  SuiteRun out;
  for (const auto& path : manifest.problem_paths) {
    const ProblemDef problem = load_problem(path);
    for (const std::string& planner : planners) {
      for (int trial = 0; trial < manifest.trials; ++trial) {
        PlannerSettings settings = settings_template;
        settings.seed = trial_seed(manifest.seed_base, problem.name, planner, trial);

        TrialRecord rec;
        rec.suite = manifest.name;
        rec.problem = problem.name;
        rec.planner = planner;
        rec.trial = trial;
        rec.seed = settings.seed;
        try {
          const PlanResult result = run_planner(planner, problem, settings);
          rec.solved = result.solved;
          rec.t_init_ms = result.initial_time_ms;
          rec.c_init = result.initial_cost;
          rec.t_final_ms = result.final_time_ms;
          rec.c_final = result.cost;
          rec.edges_validated = result.counters.edges_validated;
          rec.states_checked = result.counters.states_checked;
          rec.batches = result.counters.batches;
          for (const TraceEvent& ev : result.trace) {
            out.traces.push_back({rec.suite, rec.problem, planner, trial, ev.t_ms, ev.cost});
          }
        } catch (const std::exception&) {
          // Failed trials are recorded, never fatal for the suite.
          rec.solved = false;
        }
        out.records.push_back(std::move(rec));
      }
    }
  }
  return out;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << kRecordsCsvHeader << "\n";
  for (const TrialRecord& r : records) {
    out << r.suite << ',' << r.problem << ',' << r.planner << ',' << r.trial << ',' << r.seed << ','
        << (r.solved ? "true" : "false") << ',' << format_double(r.t_init_ms) << ','
        << format_double(r.c_init) << ',' << format_double(r.t_final_ms) << ','
        << format_double(r.c_final) << ',' << r.edges_validated << ',' << r.states_checked << ','
        << r.batches << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

long long parse_ll(const std::string& s, int row) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("row " + std::to_string(row) + ": bad integer field \"" + s + "\"");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s, int row) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("row " + std::to_string(row) + ": bad integer field \"" + s + "\"");
  }
  return v;
}

}  // namespace

std::vector<TrialRecord> parse_records_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("records CSV: empty document");
  if (line == std::string(kRecordsCsvHeader) + "\r") line.pop_back();
  if (line != kRecordsCsvHeader) {
    throw ParseError("records CSV: unexpected header; want \"" + std::string(kRecordsCsvHeader) +
                     "\"");
  }
  std::vector<TrialRecord> records;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != 13) {
      throw ParseError("row " + std::to_string(row) + ": expected 13 fields, got " +
                       std::to_string(fields.size()));
    }
    TrialRecord r;
    r.suite = fields[0];
    r.problem = fields[1];
    r.planner = fields[2];
    r.trial = static_cast<int>(parse_ll(fields[3], row));
    r.seed = parse_u64(fields[4], row);
    if (fields[5] == "true") {
      r.solved = true;
    } else if (fields[5] == "false") {
      r.solved = false;
    } else {
      throw ParseError("row " + std::to_string(row) + ": bad boolean field \"" + fields[5] + "\"");
    }
    try {
      r.t_init_ms = parse_double_field(fields[6]);
      r.c_init = parse_double_field(fields[7]);
      r.t_final_ms = parse_double_field(fields[8]);
      r.c_final = parse_double_field(fields[9]);
    } catch (const ParseError& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what());
    }
    r.edges_validated = parse_ll(fields[10], row);
    r.states_checked = parse_ll(fields[11], row);
    r.batches = parse_ll(fields[12], row);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<TrialRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open records CSV: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_records_csv(buf.str());
}

void write_records_csv(const std::vector<TrialRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write records CSV: " + path.string());
  out << records_to_csv(records);
  if (!out) throw IoError("failed writing records CSV: " + path.string());
}

std::string traces_to_csv(const std::vector<TraceRow>& traces) {
  std::ostringstream out;
  out << kTraceCsvHeader << "\n";
  for (const TraceRow& t : traces) {
    out << t.suite << ',' << t.problem << ',' << t.planner << ',' << t.trial << ','
        << format_double(t.t_ms) << ',' << format_double(t.cost) << "\n";
  }
  return out.str();
}

void write_trace_csv(const std::vector<TraceRow>& traces, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write trace CSV: " + path.string());
  out << traces_to_csv(traces);
  if (!out) throw IoError("failed writing trace CSV: " + path.string());
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, double alpha) {
  std::map<std::pair<std::string, std::string>, std::vector<const TrialRecord*>> groups;
  for (const TrialRecord& r : records) {
    groups[{r.suite, r.planner}].push_back(&r);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, group] : groups) {
    SummaryRow row;
    row.suite = key.first;
    row.planner = key.second;
    row.total = static_cast<long long>(group.size());
    std::vector<double> t_init;
    std::vector<double> c_init;
    t_init.reserve(group.size());
    c_init.reserve(group.size());
    for (const TrialRecord* r : group) {
      if (r->solved) ++row.solved;
      t_init.push_back(r->t_init_ms);
      c_init.push_back(r->c_init);
    }
    row.frac = static_cast<double>(row.solved) / static_cast<double>(row.total);
    std::tie(row.frac_lo, row.frac_hi) = clopper_pearson(row.solved, row.total, alpha);
    std::sort(t_init.begin(), t_init.end());
    std::sort(c_init.begin(), c_init.end());
    row.t_init = median_ci(t_init, alpha);
    row.c_init = median_ci(c_init, alpha);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string ci3(double point, double lo, double hi) {
  return format_double(point) + " [" + format_double(lo) + ", " + format_double(hi) + "]";
}

}  // namespace

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"suite", "planner", "solved % [99% CI]", "median t_init ms [99% CI]",
                   "median c_init [99% CI]"});
  for (const SummaryRow& r : rows) {
    char pct[64];
    std::snprintf(pct, sizeof(pct), "%.1f%% (%lld/%lld) [%.1f, %.1f]", 100.0 * r.frac, r.solved,
                  r.total, 100.0 * r.frac_lo, 100.0 * r.frac_hi);
    cells.push_back({r.suite, r.planner, pct, ci3(r.t_init.median, r.t_init.lo, r.t_init.hi),
                     ci3(r.c_init.median, r.c_init.lo, r.c_init.hi)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << std::string(width[c] - row[c].size() + (c + 1 < row.size() ? 2 : 0), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "suite,planner,solved,total,solve_frac,solve_lo,solve_hi,"
         "t_init_median,t_init_lo,t_init_hi,c_init_median,c_init_lo,c_init_hi\n";
  for (const SummaryRow& r : rows) {
    out << r.suite << ',' << r.planner << ',' << r.solved << ',' << r.total << ','
        << format_double(r.frac) << ',' << format_double(r.frac_lo) << ','
        << format_double(r.frac_hi) << ',' << format_double(r.t_init.median) << ','
        << format_double(r.t_init.lo) << ',' << format_double(r.t_init.hi) << ','
        << format_double(r.c_init.median) << ',' << format_double(r.c_init.lo) << ','
        << format_double(r.c_init.hi) << "\n";
  }
  return out.str();
}

}  // namespace fcit
