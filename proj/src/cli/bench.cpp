#include "lscb/cli/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace lscb::cli {

std::vector<testkit::NamedFormula> generate_instances(std::size_t n, std::size_t m,
                                                      std::size_t count, std::uint64_t seed) {
  std::vector<testkit::NamedFormula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    out.push_back({"rand-n" + std::to_string(n) + "-m" + std::to_string(m) + "-s" + std::to_string(s),
                   testkit::random_3sat(n, m, s)});
  }
  return out;
}

namespace {

BenchRow solve_one(const testkit::NamedFormula& inst, BacktrackMode mode, const BenchOptions& opt) {
  SolverConfig cfg = opt.base;
  cfg.mode = mode;
  BenchRow row{inst.name, inst.formula.num_vars(), inst.formula.num_clauses(), mode};
  const auto start = std::chrono::steady_clock::now();
  Solver solver(inst.formula, cfg);
  const Verdict v = solver.solve();
  const auto stop = std::chrono::steady_clock::now();
  if (v.sat() && !satisfies(inst.formula, v.model)) {
    throw BenchDisagreement(inst.name + ": " + std::string(to_string(mode)) +
                            " returned a model that falsifies a clause");
  }
  row.verdict = v.result;
  row.stats = solver.stats();
  if (opt.timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

std::string_view verdict_name(Result r) { return r == Result::sat ? "SAT" : "UNSAT"; }

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<testkit::NamedFormula>& instances,
                                const BenchOptions& options) {
  const std::size_t modes = options.modes.size();
  const std::size_t total = instances.size() * modes;
  std::vector<BenchRow> rows(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        rows[k] = solve_one(instances[k / modes], options.modes[k % modes], options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const BenchRow& first = rows[i * modes];
    for (std::size_t j = 1; j < modes; ++j) {
      const BenchRow& other = rows[i * modes + j];
      if (other.verdict == first.verdict) continue;
      std::ostringstream os;
      os << "verdict disagreement on " << first.instance << ":";
      for (std::size_t q = 0; q < modes; ++q) {
        const BenchRow& r = rows[i * modes + q];
        os << " " << to_string(r.mode) << "=" << verdict_name(r.verdict) << " (" << r.stats << ")";
      }
      throw BenchDisagreement(os.str());
    }
  }
  return rows;
}

namespace {

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

void write_row(std::ostream& out, const BenchRow& r) {
  out << r.instance << ',' << r.n << ',' << r.m << ',' << to_string(r.mode) << ','
      << verdict_name(r.verdict) << ',' << r.stats.propagations << ',' << r.stats.decisions << ','
      << r.stats.conflicts << ',' << r.stats.reimplications << ',' << r.stats.mli_detected << ',';
  if (r.wall_ms) out << fixed2(*r.wall_ms);
  out << '\n';
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows,
               const std::vector<BacktrackMode>& modes) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) write_row(out, r);
  for (BacktrackMode mode : modes) {
    for (Result verdict : {Result::sat, Result::unsat}) {
      double sums[6] = {};
      std::size_t count = 0, timed = 0;
      for (const auto& r : rows) {
        if (r.mode != mode || r.verdict != verdict) continue;
        ++count;
        sums[0] += static_cast<double>(r.stats.propagations);
        sums[1] += static_cast<double>(r.stats.decisions);
        sums[2] += static_cast<double>(r.stats.conflicts);
        sums[3] += static_cast<double>(r.stats.reimplications);
        sums[4] += static_cast<double>(r.stats.mli_detected);
        if (r.wall_ms) {
          sums[5] += *r.wall_ms;
          ++timed;
        }
      }
      out << "mean,,," << to_string(mode) << ',' << verdict_name(verdict);
      for (int k = 0; k < 5; ++k) {
        out << ',';
        if (count) out << fixed2(sums[k] / static_cast<double>(count));
      }
      out << ',';
      if (timed) out << fixed2(sums[5] / static_cast<double>(timed));
      out << '\n';
    }
  }
}

}  // namespace lscb::cli
