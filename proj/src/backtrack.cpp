#include "lscb/backtrack.hpp"

#include <algorithm>
#include <optional>

namespace lscb {

namespace {

struct PendingReimplication {
  ClauseRef clause;
  Level residual;
};

Lit unassigned_literal(const Clause& clause, const TrailState& trail) {
  std::optional<Lit> found;
  for (Lit lit : clause.lits) {
    if (trail.value(lit) == LitValue::unassigned) {
      LSCB_EXPECT(!found, "lazy reason has more than one unassigned literal after backtracking");
      found = lit;
    } else {
      LSCB_EXPECT(trail.is_false(lit), "lazy reason is satisfied after backtracking");
    }
  }
  LSCB_EXPECT(found.has_value(), "lazy reason has no unassigned literal after backtracking");
  return *found;
}

}  // namespace

void backtrack(TrailState& trail, const Formula& formula, BacktrackMode mode, Level level,
               Stats& stats) {
  const Level from = trail.decision_level();
  LSCB_EXPECT(level < from, "backtrack target must be below the current decision level");

  const std::size_t old_head = trail.head();
  const std::size_t old_size = trail.size();
  // Position of the decision that opens level+1, taken before positions shift.
  const std::size_t restore_point = *trail.position(trail.decisions()[level.value()]);

  std::vector<PendingReimplication> pending;
  std::size_t removed = 0;
  trail.remove_above(level, [&](Lit lit) {
    ++removed;
    if (mode == BacktrackMode::lscb && trail.lazy_level(lit) <= level) {
      pending.push_back({trail.lazy(lit), trail.lazy_level(lit)});
    }
  });

  if (mode == BacktrackMode::ncb) {
    LSCB_EXPECT(trail.size() == restore_point && old_size - removed == restore_point,
                "non-chronological trail is not level-ordered");
  }
  if (mode == BacktrackMode::rscb) trail.set_head(std::min(old_head, restore_point));

  emit(trail.trace(), {.kind = EventKind::backtrack,
                       .level = level,
                       .from_level = from,
                       .removed = static_cast<std::uint32_t>(removed),
                       .head = static_cast<std::uint32_t>(trail.head())});

  std::stable_sort(pending.begin(), pending.end(),
                   [](const auto& a, const auto& b) { return a.residual < b.residual; });
  for (const auto& p : pending) {
    const Lit lit = unassigned_literal(formula[p.clause], trail);
    trail.enqueue_implied(lit, p.clause, p.residual, /*reimplied=*/true);
    ++stats.reimplications;
  }
}

}  // namespace lscb
