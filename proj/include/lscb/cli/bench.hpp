#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lscb/solver.hpp"
#include "lscb/testkit/generate.hpp"

namespace lscb::cli {

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  BacktrackMode mode = BacktrackMode::lscb;
  Result verdict = Result::unsat;
  Stats stats;
  std::optional<double> wall_ms;
};

struct BenchOptions {
  std::vector<BacktrackMode> modes{BacktrackMode::ncb, BacktrackMode::wcb, BacktrackMode::rscb,
                                   BacktrackMode::lscb};
  SolverConfig base;  // mode is overridden per row
  unsigned jobs = 1;
  bool timing = false;
};

/// Raised when two modes disagree on an instance or a model fails to check.
class BenchDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `count` random instances; instance i uses seed + i.
std::vector<testkit::NamedFormula> generate_instances(std::size_t n, std::size_t m,
                                                      std::size_t count, std::uint64_t seed);

/// Solves every instance in every mode. Rows come back instance-major, in
/// mode order, regardless of how many worker threads ran.
std::vector<BenchRow> run_bench(const std::vector<testkit::NamedFormula>& instances,
                                const BenchOptions& options);

inline constexpr const char* kCsvHeader =
    "instance,n,m,mode,verdict,propagations,decisions,conflicts,reimplications,mli_detected,"
    "wall_ms";

void write_row(std::ostream& out, const BenchRow& row);
/// Header, data rows, then per mode one mean row for SAT and one for UNSAT.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows,
               const std::vector<BacktrackMode>& modes);

}  // namespace lscb::cli
