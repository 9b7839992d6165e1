#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lscb/formula.hpp"
#include "lscb/trail.hpp"

namespace lscb {

inline constexpr int kNumInvariants = 8;

struct Violation {
  int invariant = 0;
  ClauseRef clause;  // watched-literal invariants
  Lit lit;           // trail invariants
  std::string detail;
};

/// Evaluates invariant `id` (1..8) on a quiescent state. Watched-literal
/// invariants are checked in both orientations of the watch pair.
///
/// With `blockers` set, invariants 1, 4, 5 and 7 also accept a clause whose
/// blocker is satisfied at or below the falsified watch, which is what the
/// blocker shortcut in propagation guarantees. Invariant 8 is only
/// meaningful with blockers; without them it reports nothing.
///
/// `conflict` names a clause that propagation just reported as falsified and
/// that awaits analysis. Its watch may already sit on a falsified literal of
/// tau, so the watched-literal invariants skip it.
std::vector<Violation> check(const TrailState& trail, const Formula& formula, int id,
                             bool blockers = false, ClauseRef conflict = ClauseRef::none());

struct InvariantReport {
  std::array<std::uint64_t, kNumInvariants + 1> counts{};  // index = invariant id
  std::vector<Violation> samples;                          // first few, for diagnostics

  std::uint64_t total() const;
  void merge(const InvariantReport& other);
};

/// Runs every id whose bit (1 << id) is set in `mask`.
InvariantReport check_all(const TrailState& trail, const Formula& formula, bool blockers,
                          ClauseRef conflict = ClauseRef::none(), unsigned mask = 0x1FE);

}  // namespace lscb
