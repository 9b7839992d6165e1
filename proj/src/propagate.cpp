#include "lscb/propagate.hpp"

#include <algorithm>

namespace lscb {

void WatchLists::attach(const Formula& formula, ClauseRef ref) {
  const Clause& clause = formula[ref];
  LSCB_EXPECT(clause.watched() && clause.watch[0] != clause.watch[1],
              "a watched clause needs two distinct watch slots");
  (*this)[clause.watched_lit(0)].push_back(ref);
  (*this)[clause.watched_lit(1)].push_back(ref);
}

void WatchLists::detach(const Formula& formula, ClauseRef ref) {
  const Clause& clause = formula[ref];
  for (int slot = 0; slot < 2; ++slot) {
    auto& list = (*this)[clause.watched_lit(slot)];
    if (auto it = std::find(list.begin(), list.end(), ref); it != list.end()) list.erase(it);
  }
}

std::uint32_t search_replacement(const Clause& clause, int slot, const TrailState& trail) {
  const std::uint32_t own = clause.watch[slot];
  const std::uint32_t other = clause.watch[1 - slot];
  const auto n = static_cast<std::uint32_t>(clause.size());

  for (std::uint32_t k = 0; k < n; ++k) {
    if (k == own || k == other) continue;
    if (!trail.is_false(clause.lits[k])) return k;
  }

  // C \ {c2} is falsified: pick its highest literal.
  std::uint32_t best = own;
  Level best_level = Level(0);
  bool found = false;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (k == own || k == other) continue;
    const Level lvl = trail.level(clause.lits[k]);
    if (!found || lvl > best_level) {
      best = k;
      best_level = lvl;
      found = true;
    }
  }
  if (!found || trail.level(clause.lits[own]) > best_level) return own;
  return best;
}

bool Propagator::skip_on_other_watch(Lit c2, Level c1_level) const {
  if (!trail_.is_true(c2)) return false;
  if (options_.mode != BacktrackMode::lscb) return true;
  return trail_.level(c2) <= c1_level || trail_.lazy_level(c2) <= c1_level;
}

bool Propagator::skip_on_blocker(const Clause& clause, Level c1_level) const {
  if (!options_.blockers || !clause.blocker.defined() || !trail_.is_true(clause.blocker)) {
    return false;
  }
  return options_.mode == BacktrackMode::ncb || trail_.level(clause.blocker) <= c1_level;
}

PropagationOutcome Propagator::propagate_literal(Lit lit) {
  const Lit c1 = ~lit;
  const Level c1_level = trail_.level(c1);
  auto& list = watches_[c1];
  std::size_t read = 0;
  std::size_t write = 0;
  const bool lazy_mode = options_.mode == BacktrackMode::lscb;

  while (read < list.size()) {
    const ClauseRef ref = list[read++];
    Clause& clause = formula_[ref];

    if (skip_on_blocker(clause, c1_level)) {
      list[write++] = ref;
      continue;
    }
    const int slot = clause.slot_of(c1);
    LSCB_EXPECT(slot >= 0, "clause in a watch list it does not watch");
    const Lit c2 = clause.watched_lit(1 - slot);
    if (skip_on_other_watch(c2, c1_level)) {
      if (options_.blockers) clause.blocker = c2;
      list[write++] = ref;
      continue;
    }

    const std::uint32_t r_index = search_replacement(clause, slot, trail_);
    const Lit r = clause.lits[r_index];
    if (options_.blockers && trail_.is_true(r) && trail_.level(r) <= c1_level) {
      clause.blocker = r;
      list[write++] = ref;
      continue;
    }
    if (r_index != clause.watch[slot]) {
      clause.watch[slot] = r_index;
      watches_[r].push_back(ref);
    } else {
      list[write++] = ref;
    }
    if (!trail_.is_false(r)) continue;

    if (trail_.is_false(c2)) {
      while (read < list.size()) list[write++] = list[read++];
      list.resize(write);
      return {ref};
    }
    const Level r_level = trail_.level(r);
    if (trail_.is_true(c2)) {
      // Only reachable in LSCB: c2 is satisfied above the clause's other literals.
      if (lazy_mode && trail_.level(c2) > r_level && trail_.lazy_level(c2) > r_level) {
        trail_.set_lazy(c2, ref, r_level);
        ++stats_.mli_detected;
      }
      continue;
    }
    trail_.enqueue_implied(c2, ref, r_level);
  }
  list.resize(write);
  return {};
}

PropagationOutcome Propagator::bcp(const std::function<void()>& after_pop) {
  while (!trail_.queue_empty()) {
    const PropagationOutcome outcome = propagate_literal(trail_.peek_next());
    if (outcome.conflict()) return outcome;
    trail_.pop_next();
    ++stats_.propagations;
    if (after_pop) after_pop();
  }
  return {};
}

}  // namespace lscb
