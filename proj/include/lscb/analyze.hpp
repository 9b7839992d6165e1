#pragma once

#include <span>
#include <vector>

#include "lscb/formula.hpp"
#include "lscb/trail.hpp"

namespace lscb {

// Level utilities over the current assignment. The empty clause has level 0.
Level clause_level(std::span<const Lit> clause, const TrailState& trail);
/// Second-highest distinct level, 0 if there is none.
Level second_level(std::span<const Lit> clause, const TrailState& trail);
std::size_t count_at_level(std::span<const Lit> clause, Level level, const TrailState& trail);
/// Level of `clause` without `lit`.
Level residual_level(std::span<const Lit> clause, Lit lit, const TrailState& trail);

/// Binary resolution (D \ {~pivot}) u (C' \ {pivot}) with set semantics.
/// The result keeps D's order, then appends new literals of C'.
std::vector<Lit> resolve(std::span<const Lit> d, std::span<const Lit> c, Lit pivot);

struct LearnedClause {
  /// Asserting literal first, then one literal at second_level (when |D| > 1).
  std::vector<Lit> literals;
  Level level;
  Level second_level;
  Lit asserting;
};

struct ResolutionStep {
  Lit pivot;  // trail literal resolved away
  ClauseRef clause;
  bool lazy;  // clause came from lambda rather than reason
};

struct Analysis {
  LearnedClause learned;
  std::vector<ResolutionStep> steps;
};

/// First-UIP analysis of a falsified clause. With analyze2 a lazy reason, when
/// present, replaces the real one and the search does not stop on a UIP whose
/// trail literal has one; analyze1 never consults lazy reasons.
Analysis analyze(std::span<const Lit> conflict, AnalyzeStrategy strategy, const TrailState& trail,
                 const Formula& formula);

/// Drops literals of `learned` that are implied by the rest through reason or
/// lazy reason chains. The asserting literal is never removed.
LearnedClause minimize(const LearnedClause& learned, const TrailState& trail,
                       const Formula& formula);

/// Puts the asserting literal first and a second-level literal second and fills
/// in the level fields. Expects a unique literal at the clause level.
LearnedClause make_learned(std::vector<Lit> literals, const TrailState& trail);

}  // namespace lscb
