#include "lscb/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "lscb/cli/bench.hpp"
#include "lscb/solver.hpp"
#include "lscb/testkit/generate.hpp"

namespace lscb::cli {

namespace {

struct SolverFlags {
  std::string mode = "lscb";
  int analyze = 2;
  std::uint32_t cb_threshold = 100;
  bool minimize = false;
  bool blockers = false;
  std::string restarts = "off";
  std::uint64_t seed = 0;
  std::string check = "off";

  void add_to(CLI::App& app, bool with_mode) {
    if (with_mode) app.add_option("--mode", mode, "ncb, wcb, rscb or lscb");
    app.add_option("--analyze", analyze, "conflict analysis variant (1 or 2)");
    app.add_option("--cb-threshold", cb_threshold, "backjump size that switches to chronological backtracking");
    app.add_flag("--minimize", minimize, "minimize learned clauses");
    app.add_flag("--blockers", blockers, "use blocker literals in propagation");
    app.add_option("--restarts", restarts, "off or agility");
    app.add_option("--seed", seed, "tie-breaking seed for the decision heuristic");
    app.add_option("--check", check, "invariant checks: off, coarse or fine");
  }

  SolverConfig config() const {
    SolverConfig c;
    c.mode = parse_mode(mode);
    if (analyze != 1 && analyze != 2) throw std::invalid_argument("--analyze must be 1 or 2");
    c.analyze = analyze == 1 ? AnalyzeStrategy::analyze1 : AnalyzeStrategy::analyze2;
    c.cb_threshold = cb_threshold;
    c.minimize = minimize;
    c.blockers = blockers;
    c.restarts = parse_restarts(restarts);
    c.seed = seed;
    c.check_level = parse_check_level(check);
    c.validate();
    return c;
  }
};

void print_model(std::ostream& out, const std::vector<bool>& model) {
  std::size_t on_line = 0;
  for (std::size_t v = 1; v < model.size(); ++v) {
    if (on_line == 0) out << 'v';
    out << ' ' << (model[v] ? "" : "-") << v;
    if (++on_line == 10) {
      out << '\n';
      on_line = 0;
    }
  }
  out << (on_line == 0 ? "v" : "") << " 0\n";
}

int solve_command(const std::string& path, const SolverFlags& flags, const std::string& stats_path,
                  const std::string& trace_path, bool timing, std::ostream& out, std::ostream& err) {
  const SolverConfig cfg = flags.config();
  Formula formula = read_dimacs_file(path);
  const std::size_t n = formula.num_vars(), m = formula.num_clauses();

  std::ofstream trace_file;
  std::unique_ptr<JsonlTraceSink> sink;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) throw std::runtime_error("cannot open trace file " + trace_path);
    sink = std::make_unique<JsonlTraceSink>(trace_file, cfg.mode);
  }

  const auto start = std::chrono::steady_clock::now();
  Solver solver(std::move(formula), cfg);
  solver.set_trace(sink.get());
  const Verdict verdict = solver.solve();
  const auto stop = std::chrono::steady_clock::now();

  if (sink) {
    trace_file.flush();
    if (!trace_file) throw std::runtime_error("write to trace file failed");
  }
  if (cfg.check_level != CheckLevel::off) {
    const InvariantReport& r = solver.violations();
    for (int id = 1; id <= kNumInvariants; ++id) {
      if (r.counts[id]) err << "c invariant " << id << ": " << r.counts[id] << " violations\n";
    }
  }
  if (!stats_path.empty()) {
    std::ofstream csv(stats_path);
    if (!csv) throw std::runtime_error("cannot open stats file " + stats_path);
    BenchRow row{path, n, m, cfg.mode, verdict.result, solver.stats()};
    if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    csv << kCsvHeader << '\n';
    write_row(csv, row);
    if (!csv) throw std::runtime_error("write to stats file failed");
  }

  if (verdict.sat()) {
    out << "s SATISFIABLE\n";
    print_model(out, verdict.model);
    return kExitSat;
  }
  out << "s UNSATISFIABLE\n";
  return kExitUnsat;
}

std::vector<BacktrackMode> parse_modes(const std::string& list) {
  std::vector<BacktrackMode> modes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) modes.push_back(parse_mode(item));
  if (modes.empty()) throw std::invalid_argument("--modes needs at least one mode");
  return modes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"CDCL solver with chronological backtracking variants", "lscb"};
  app.require_subcommand(1);

  SolverFlags flags;
  std::string input, stats_path, trace_path;
  bool timing = false;
  CLI::App* solve = app.add_subcommand("solve", "solve a DIMACS CNF file");
  solve->add_option("file", input, "input CNF")->required();
  flags.add_to(*solve, true);
  solve->add_option("--stats", stats_path, "write a one-row stats CSV");
  solve->add_option("--trace", trace_path, "write solver events as JSON lines");
  solve->add_flag("--timing", timing, "fill the wall_ms column of the stats CSV");

  std::size_t gen_n = 0, gen_m = 0;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "print a random 3-SAT instance");
  gen->add_option("n", gen_n, "variables")->required();
  gen->add_option("m", gen_m, "clauses")->required();
  gen->add_option("seed", gen_seed, "seed")->required();

  SolverFlags bench_flags;
  std::vector<std::uint64_t> bench_gen;
  std::string bench_dir, bench_modes = "ncb,wcb,rscb,lscb", bench_out;
  unsigned jobs = 1;
  bool bench_timing = false;
  CLI::App* bench = app.add_subcommand("bench", "compare backtracking modes");
  auto* gen_opt = bench->add_option("--gen", bench_gen, "N M COUNT SEED")->expected(4);
  auto* dir_opt = bench->add_option("--dir", bench_dir, "directory of .cnf files");
  gen_opt->excludes(dir_opt);
  bench->add_option("--modes", bench_modes, "comma-separated modes");
  bench->add_option("--jobs", jobs, "worker threads");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_flag("--timing", bench_timing, "fill the wall_ms column");
  bench_flags.add_to(*bench, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*solve) return solve_command(input, flags, stats_path, trace_path, timing, out, err);
    if (*gen) {
      write_dimacs(out, testkit::random_3sat(gen_n, gen_m, gen_seed));
      return 0;
    }
    BenchOptions opt;
    opt.modes = parse_modes(bench_modes);
    opt.base = bench_flags.config();
    opt.jobs = jobs;
    opt.timing = bench_timing;
    std::vector<testkit::NamedFormula> instances;
    if (!bench_gen.empty()) {
      instances = generate_instances(bench_gen[0], bench_gen[1], bench_gen[2], bench_gen[3]);
    } else if (!bench_dir.empty()) {
      instances = testkit::load_dimacs_dir(bench_dir);
    } else {
      err << "error: bench needs --gen or --dir\n";
      return kExitError;
    }
    const auto rows = run_bench(instances, opt);
    if (bench_out.empty()) {
      write_csv(out, rows, opt.modes);
    } else {
      std::ofstream f(bench_out);
      if (!f) throw std::runtime_error("cannot open " + bench_out);
      write_csv(f, rows, opt.modes);
      if (!f) throw std::runtime_error("write to " + bench_out + " failed");
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace lscb::cli
