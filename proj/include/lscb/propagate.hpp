#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lscb/formula.hpp"
#include "lscb/stats.hpp"
#include "lscb/trail.hpp"

namespace lscb {

/// wl(l): clauses currently watching literal l, in attachment order.
class WatchLists {
 public:
  WatchLists() = default;
  explicit WatchLists(std::size_t num_vars) : lists_(2 * (num_vars + 1)) {}

  std::vector<ClauseRef>& operator[](Lit lit) { return lists_[lit.code()]; }
  const std::vector<ClauseRef>& operator[](Lit lit) const { return lists_[lit.code()]; }

  /// Adds `ref` to the lists of both its watched literals (slot 0 first).
  void attach(const Formula& formula, ClauseRef ref);
  /// Removes `ref` from the lists of both its watched literals.
  void detach(const Formula& formula, ClauseRef ref);

 private:
  std::vector<std::vector<ClauseRef>> lists_;
};

struct PropagationOptions {
  BacktrackMode mode = BacktrackMode::lscb;
  bool blockers = false;
};

/// Candidate literal for replacing watched literal c1 (in slot `slot`).
/// Returns the literal position inside the clause: either a literal of
/// C \ {c1, c2} that is not falsified, or, when all of C \ {c2} is falsified,
/// a literal of maximal level in C \ {c2}. Ties go to the lowest position
/// other than c1's; c1 itself is returned only when it is the sole maximum.
std::uint32_t search_replacement(const Clause& clause, int slot, const TrailState& trail);

/// Outcome of propagation: conflict() is valid iff a clause became falsified.
struct PropagationOutcome {
  ClauseRef conflict_clause;
  bool conflict() const { return conflict_clause.valid(); }
};

/// Watched-literal unit propagation that records missed lower implications
/// in LSCB mode. Holds references only; construct one per use.
class Propagator {
 public:
  Propagator(Formula& formula, TrailState& trail, WatchLists& watches, Stats& stats,
             PropagationOptions options)
      : formula_(formula), trail_(trail), watches_(watches), stats_(stats), options_(options) {}

  /// Visits every clause of wl(~lit). Does not move lit into tau.
  PropagationOutcome propagate_literal(Lit lit);

  /// Propagates omega until it is empty or a conflict is found. On conflict the
  /// triggering literal stays at the head of omega. `after_pop` runs after
  /// every literal that moved into tau.
  PropagationOutcome bcp(const std::function<void()>& after_pop = {});

 private:
  bool skip_on_other_watch(Lit c2, Level c1_level) const;
  bool skip_on_blocker(const Clause& clause, Level c1_level) const;

  Formula& formula_;
  TrailState& trail_;
  WatchLists& watches_;
  Stats& stats_;
  PropagationOptions options_;
};

}  // namespace lscb
