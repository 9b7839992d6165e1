#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lscb/solver.hpp"

namespace lscb::testkit {

struct FixtureClause {
  int label;  // C<label> in the example's numbering
  std::vector<int> lits;
  std::optional<std::array<std::uint32_t, 2>> watch;
};

struct FixtureStep {
  enum class Kind { decide, propagate, handle_conflict, learn };
  Kind kind;
  int lit = 0;                  // decide
  std::vector<int> clause;      // learn
  bool expect_conflict = false; // propagate
};

/// Small hand-built search state. Clauses are attached in list order, which
/// fixes the visiting order of every watch list.
struct Fixture {
  std::string name;
  std::size_t num_vars = 0;
  std::vector<FixtureClause> clauses;
  std::vector<FixtureStep> script;

  ClauseRef ref(int label) const;
  Formula formula() const;
};

/// Six-variable example with the missed implication of v2 through C4.
/// Decisions v1, v2, v3; the level-3 conflict teaches {-3, -1}, and the
/// propagation that follows the chronological backtrack stops on C5 at level 2.
Fixture fixture_s1();

/// Seven-variable example where -v3 has the lazy reason C6 and C5 conflicts.
/// The learned clause C7 = {v4, v2} is installed by the script.
Fixture fixture_s2();

struct Replay {
  std::unique_ptr<Solver> solver;
  ClauseRef conflict;  // from the last propagate step, if it conflicted
};

/// Builds a solver for `fixture` and runs its script. Throws if a propagate
/// step does not meet its expectation.
Replay replay(const Fixture& fixture, const SolverConfig& config, TraceSink* sink = nullptr);

std::vector<int> dimacs(std::span<const Lit> lits);

}  // namespace lscb::testkit
