#include "lscb/testkit/generate.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

namespace lscb::testkit {

namespace {

// std::uniform_int_distribution is implementation-defined, so bound by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Formula random_3sat(std::size_t n, std::size_t m, std::uint64_t seed) {
  LSCB_EXPECT(n >= 3, "random 3-SAT needs at least three variables");
  std::mt19937_64 rng(seed);
  Formula f(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Lit> lits;
    while (lits.size() < 3) {
      const auto v = static_cast<Var>(below(rng, n) + 1);
      if (std::any_of(lits.begin(), lits.end(), [&](Lit l) { return l.var() == v; })) continue;
      lits.push_back(Lit::make(v, below(rng, 2) == 1));
    }
    f.add_clause(std::move(lits));
  }
  return f;
}

std::size_t threshold_clauses(std::size_t n) {
  return static_cast<std::size_t>(std::lround(4.26 * static_cast<double>(n)));
}

std::vector<NamedFormula> load_dimacs_dir(const std::string& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cnf") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<NamedFormula> out;
  for (const auto& p : paths) out.push_back({p.stem().string(), read_dimacs_file(p.string())});
  return out;
}

}  // namespace lscb::testkit
