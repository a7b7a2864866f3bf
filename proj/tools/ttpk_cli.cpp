// Command-line front end: instance generation, k-TC solving, schedule
// construction and checking, extraction and bound reports.
//
// Exit codes: 0 ok, 1 a check failed, 2 bad usage or unreadable input,
// 3 an exhaustive routine was asked to exceed its bound.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "ttpk/ktour.hpp"
#include "ttpk/metric.hpp"
#include "ttpk/reduction.hpp"
#include "ttpk/roundrobin.hpp"
#include "ttpk/supergames.hpp"
#include "ttpk/ttp.hpp"

namespace {

using namespace ttpk;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs `write` against the file at `path`, or stdout when empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

// Placement for a schedule file: a mini bundle when an instance is given,
// all teams co-located otherwise.
struct Placement {
  std::optional<ReductionBundle> bundle;
  std::optional<TtpInstance> colocated;
  const TtpInstance& ttp() const { return bundle ? bundle->ttp : *colocated; }
};

ReductionBundle mini_bundle_for(const std::string& inst_path, const std::string& sol_path,
                                int teams, int s) {
  if (inst_path.empty() || sol_path.empty()) {
    throw UsageError("--instance and --solution are required here");
  }
  if (s <= 0) throw UsageError("--s is required with --instance");
  KtcInstance inst = load_instance(inst_path);
  KtcSolution sol = load_solution(sol_path);
  const int per = inst.k() * s;
  if (teams % per != 0) {
    throw UsageError("schedule has " + std::to_string(teams) + " teams, not a multiple of k*s = " +
                     std::to_string(per));
  }
  return build_mini_bundle(inst, sol, teams / per, s);
}

int run_gen(std::uint64_t seed, int n, int k, Weight wmax, const std::string& out) {
  KtcInstance inst = random_restricted_ktc(seed, n, k, wmax);
  emit(out, [&](std::ostream& os) { write_instance(os, inst); });
  return kOk;
}

int run_validate_instance(const std::string& in) {
  // load_instance rejects metric and restricted violations with the first
  // offending entry; format and shape problems stay usage errors.
  try {
    KtcInstance inst = load_instance(in);
    std::cout << "valid n=" << inst.size() << " k=" << inst.k() << "\n";
    return kOk;
  } catch (const MetricError& e) {
    std::cout << "invalid: " << e.what() << "\n";
  } catch (const RestrictedError& e) {
    std::cout << "invalid: " << e.what() << "\n";
  }
  return kCheckFailed;
}

int run_solve(const std::string& in, const std::string& method, std::uint64_t seed,
              const std::string& out) {
  KtcInstance inst = load_instance(in);
  KtcSolution sol = method == "exact" ? brute_force_ktc(inst) : heuristic_ktc(inst, seed);
  const Weight w = solution_weight(sol, inst);
  emit(out, [&](std::ostream& os) { write_solution(os, sol, w); });
  return kOk;
}

int report_bounds(const ReductionBundle& b, const ScheduleView* schedule, int sample,
                  bool full_scan, int threads, const std::string& out) {
  const ScheduleView& s = schedule ? *schedule : *b.schedule;
  Weight cost;
  if (schedule) {
    cost = schedule_cost(s, b.ttp, threads);
  } else {
    cost = streamed_cost(b, sample, full_scan, threads).total;
  }
  std::vector<int> dummies = dummy_sample(b, full_scan ? b.teams() : sample);
  Extraction ex = best_extraction(s, b, dummies, threads);
  BoundReport r = verify_bounds(cost, b, ex.weight);
  emit(out, [&](std::ostream& os) { write_bounds(os, r); });
  return r.all_pass() ? kOk : kCheckFailed;
}

int run_build(const std::string& mode, int k, int d, int s, const std::string& inst_path,
              const std::string& sol_path, int sample, int threads, const std::string& out) {
  if (mode == "mini") {
    if (!inst_path.empty()) {
      if (sol_path.empty()) throw UsageError("--solution is required with --instance");
      KtcInstance inst = load_instance(inst_path);
      if (k > 0 && k != inst.k()) throw UsageError("--k disagrees with the instance");
      k = inst.k();
      build_mini_bundle(inst, load_solution(sol_path), d, s);
    }
    if (k <= 0 || d <= 0 || s <= 0) throw UsageError("mini mode needs --k, --d and --s");
    const SuperTeamLayout layout{k, d, s};
    layout.check();
    ScheduleTable table = assemble_schedule(layout, threads);
    emit(out, [&](std::ostream& os) { write_schedule(os, table, k); });
    return kOk;
  }
  if (inst_path.empty() || sol_path.empty()) {
    throw UsageError("reduction mode needs --instance and --solution");
  }
  ReductionBundle b = build_bundle(load_instance(inst_path), load_solution(sol_path));
  std::cerr << "m=" << b.m() << " d=" << b.d() << " s=" << b.s() << " teams=" << b.teams()
            << " days=" << b.layout.days() << "\n";
  return report_bounds(b, nullptr, sample, false, threads, out);
}

int run_tables(const std::string& which, const std::string& out) {
  if (which == "ttp2") {
    ScheduleTable t = special_ttp2(6);
    emit(out, [&](std::ostream& os) { write_schedule(os, t, 2); });
    return kOk;
  }
  std::vector<int> x(6), y(6);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), 6);
  GameBlock b = which == "normal" ? extend_normal(3, 2, x, y) : extend_left(3, 2, x, y);
  emit(out, [&](std::ostream& os) { write_schedule(os, b.table, 3); });
  return kOk;
}

int run_validate(const std::string& path, int k, int threads) {
  int header_k = 0;
  ScheduleTable t = load_schedule(path, &header_k);
  if (k <= 0) k = header_k;
  ValidateOptions opt;
  opt.threads = threads;
  auto violations = validate_schedule(t, k, opt);
  if (violations.empty()) {
    std::cout << "feasible n=" << t.teams() << " days=" << t.days() << " k=" << k << "\n";
    return kOk;
  }
  std::cout << "infeasible violations=" << violations.size() << "\n";
  for (const auto& v : violations) std::cout << v.ToString() << "\n";
  return kCheckFailed;
}

int run_cost(const std::string& path, const std::string& inst_path, const std::string& sol_path,
             int s, int threads) {
  ScheduleTable t = load_schedule(path);
  Placement p;
  if (inst_path.empty()) {
    p.colocated.emplace(TtpInstance::Colocated(t.teams()));
  } else {
    p.bundle.emplace(mini_bundle_for(inst_path, sol_path, t.teams(), s));
  }
  std::cout << "cost=" << schedule_cost(t, p.ttp(), threads) << "\n";
  return kOk;
}

int run_extract(const std::string& path, const std::string& inst_path,
                const std::string& sol_path, int s, int dummy, int sample, int threads,
                const std::string& out) {
  ScheduleTable t = load_schedule(path);
  ReductionBundle b = mini_bundle_for(inst_path, sol_path, t.teams(), s);
  std::vector<int> teams;
  if (dummy > 0) {
    if (!b.is_dummy(dummy - 1)) throw UsageError("team " + std::to_string(dummy) + " is not a dummy");
    teams.push_back(dummy - 1);
  } else {
    teams = dummy_sample(b, sample > 0 ? sample : b.teams());
  }
  Extraction ex = best_extraction(t, b, teams, threads);
  if (!validate_ktc_solution(ex.solution, b.instance).empty()) {
    std::cerr << "extracted tours do not form a valid cover\n";
    emit(out, [&](std::ostream& os) { write_solution(os, ex.solution, ex.weight); });
    return kCheckFailed;
  }
  emit(out, [&](std::ostream& os) { write_solution(os, ex.solution, ex.weight); });
  return kOk;
}

int run_bounds(const std::string& mode, const std::string& inst_path,
               const std::string& sol_path, int d, int s, const std::string& sched_path,
               int sample, bool full_scan, int threads, const std::string& out) {
  KtcInstance inst = load_instance(inst_path);
  KtcSolution sol = load_solution(sol_path);
  if (mode == "reduction") {
    if (!sched_path.empty()) throw UsageError("--schedule applies to mini mode only");
    return report_bounds(build_bundle(inst, sol), nullptr, sample, full_scan, threads, out);
  }
  if (!sched_path.empty()) {
    ScheduleTable t = load_schedule(sched_path);
    if (s <= 0) throw UsageError("--s is required with --schedule");
    ReductionBundle b = build_mini_bundle(inst, sol, t.teams() / (inst.k() * s), s);
    if (b.teams() != t.teams()) throw UsageError("schedule does not fit the layout");
    return report_bounds(b, &t, sample, true, threads, out);
  }
  if (d <= 0 || s <= 0) throw UsageError("mini mode needs --d and --s");
  return report_bounds(build_mini_bundle(inst, sol, d, s), nullptr, sample, full_scan,
                       threads, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traveling tournament toolkit: k-tour covers, super-game schedules, reductions"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  std::uint64_t seed = 1;
  int n = 0, k = 0, d = 0, s = 0, sample = 8, dummy = 0;
  Weight wmax = 10;
  bool full_scan = false;
  std::string in, out, method = "heuristic", mode, which, inst_path, sol_path, sched_path;

  auto* gen = app.add_subcommand("gen", "Generate a restricted k-TC instance");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--n", n, "Vertex count including the depot")->required()->check(CLI::Range(2, 100000));
  gen->add_option("--k", k, "Tour capacity")->check(CLI::Range(3, 1000))->default_val(3);
  gen->add_option("--wmax", wmax, "Upper bound on depot distances")->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* vinst = app.add_subcommand("validate-instance", "Check a KTC instance file");
  vinst->add_option("--in", in, "Instance file")->required();

  auto* solve = app.add_subcommand("solve", "Solve a k-TC instance");
  solve->add_option("--in", in, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--method", method, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  solve->add_option("--seed", seed, "Heuristic tie-break seed");
  solve->add_option("--out", out, "Output file (default stdout)");

  auto* build = app.add_subcommand("build", "Assemble a schedule or run the reduction");
  build->add_option("--mode", mode, "mini or reduction")
      ->required()
      ->check(CLI::IsMember({"mini", "reduction"}));
  build->add_option("--k", k, "Path length")->check(CLI::Range(3, 1000));
  build->add_option("--d", d, "Paths per super-team")->check(CLI::PositiveNumber);
  build->add_option("--s", s, "Super-team count (even)")->check(CLI::PositiveNumber);
  build->add_option("--instance", inst_path, "KTC instance")->check(CLI::ExistingFile);
  build->add_option("--solution", sol_path, "KTC solution")->check(CLI::ExistingFile);
  build->add_option("--sample", sample, "Dummy sample size")->check(CLI::PositiveNumber);
  build->add_option("--out", out, "Output file (default stdout)");

  auto* tables = app.add_subcommand("tables", "Print a reference block");
  tables->add_option("--which", which, "normal, left or ttp2")
      ->required()
      ->check(CLI::IsMember({"normal", "left", "ttp2"}));
  tables->add_option("--out", out, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check a schedule's feasibility");
  validate->add_option("--schedule", sched_path, "Schedule file")->required()->check(CLI::ExistingFile);
  validate->add_option("--k", k, "Bound on home/away runs (default: file header)")
      ->check(CLI::PositiveNumber);

  auto* cost = app.add_subcommand("cost", "Total travel distance of a schedule");
  cost->add_option("--schedule", sched_path, "Schedule file")->required()->check(CLI::ExistingFile);
  cost->add_option("--instance", inst_path, "KTC instance (default: all teams co-located)")
      ->check(CLI::ExistingFile);
  cost->add_option("--solution", sol_path, "KTC solution placing U_1")->check(CLI::ExistingFile);
  cost->add_option("--s", s, "Super-team count")->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "Shortcut dummy itineraries into tours");
  extract->add_option("--schedule", sched_path, "Schedule file")->required()->check(CLI::ExistingFile);
  extract->add_option("--instance", inst_path, "KTC instance")->required()->check(CLI::ExistingFile);
  extract->add_option("--solution", sol_path, "KTC solution placing U_1")->required()->check(CLI::ExistingFile);
  extract->add_option("--s", s, "Super-team count")->required()->check(CLI::PositiveNumber);
  auto* dummy_opt = extract->add_option("--dummy", dummy, "One dummy team (1-based)")
                        ->check(CLI::PositiveNumber);
  extract->add_option("--sample", sample, "Dummies to try (default all)")
      ->check(CLI::PositiveNumber)
      ->excludes(dummy_opt);
  extract->add_option("--out", out, "Output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Check the reduction's cost inequalities");
  bounds->add_option("--instance", inst_path, "KTC instance")->required()->check(CLI::ExistingFile);
  bounds->add_option("--solution", sol_path, "KTC solution")->required()->check(CLI::ExistingFile);
  bounds->add_option("--mode", mode, "reduction (default) or mini")
      ->check(CLI::IsMember({"mini", "reduction"}))
      ->default_val("reduction");
  bounds->add_option("--d", d, "Paths per super-team (mini)")->check(CLI::PositiveNumber);
  bounds->add_option("--s", s, "Super-team count (mini)")->check(CLI::PositiveNumber);
  bounds->add_option("--schedule", sched_path, "Score this schedule instead (mini)")
      ->check(CLI::ExistingFile);
  bounds->add_option("--sample", sample, "Dummy sample size")->check(CLI::PositiveNumber);
  bounds->add_flag("--full-scan", full_scan, "Evaluate every dummy");
  bounds->add_option("--out", out, "Output file (default stdout)");

  // Only the explicit `--sample` of extract should override "all dummies".
  bool extract_sample_given = false;

  try {
    app.parse(argc, argv);
    extract_sample_given = extract->count("--sample") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return run_gen(seed, n, k, wmax, out);
    if (*vinst) return run_validate_instance(in);
    if (*solve) return run_solve(in, method, seed, out);
    if (*build) return run_build(mode, k, d, s, inst_path, sol_path, sample, threads, out);
    if (*tables) return run_tables(which, out);
    if (*validate) return run_validate(sched_path, k, threads);
    if (*cost) return run_cost(sched_path, inst_path, sol_path, s, threads);
    if (*extract) {
      return run_extract(sched_path, inst_path, sol_path, s, dummy,
                         extract_sample_given ? sample : 0, threads, out);
    }
    if (*bounds) {
      return run_bounds(mode, inst_path, sol_path, d, s, sched_path, sample, full_scan, threads,
                        out);
    }
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const AssemblyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Metric, restricted and solution-contract failures in an input file.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
