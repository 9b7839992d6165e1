#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscb/formula.hpp"

namespace lscb::testkit {

/// Uniform random 3-SAT: each clause has three distinct variables with
/// independent random signs. The same (n, m, seed) always gives the same
/// formula, across platforms.
Formula random_3sat(std::size_t n, std::size_t m, std::uint64_t seed);

/// Clause count for n variables at ratio 4.26, rounded to nearest.
std::size_t threshold_clauses(std::size_t n);

struct NamedFormula {
  std::string name;
  Formula formula;
};

/// Every *.cnf file of `dir`, sorted by file name.
std::vector<NamedFormula> load_dimacs_dir(const std::string& dir);

}  // namespace lscb::testkit
