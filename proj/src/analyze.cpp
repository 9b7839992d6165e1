#include "lscb/analyze.hpp"

#include <algorithm>
#include <unordered_set>

namespace lscb {

Level clause_level(std::span<const Lit> clause, const TrailState& trail) {
  Level best(0);
  for (Lit lit : clause) best = std::max(best, trail.level(lit));
  return best;
}

Level second_level(std::span<const Lit> clause, const TrailState& trail) {
  const Level top = clause_level(clause, trail);
  Level second(0);
  for (Lit lit : clause) {
    const Level lvl = trail.level(lit);
    if (lvl < top) second = std::max(second, lvl);
  }
  return second;
}

std::size_t count_at_level(std::span<const Lit> clause, Level level, const TrailState& trail) {
  return static_cast<std::size_t>(
      std::count_if(clause.begin(), clause.end(), [&](Lit l) { return trail.level(l) == level; }));
}

Level residual_level(std::span<const Lit> clause, Lit lit, const TrailState& trail) {
  Level best(0);
  for (Lit l : clause) {
    if (l != lit) best = std::max(best, trail.level(l));
  }
  return best;
}

std::vector<Lit> resolve(std::span<const Lit> d, std::span<const Lit> c, Lit pivot) {
  LSCB_EXPECT(std::find(c.begin(), c.end(), pivot) != c.end(), "pivot missing from the reason");
  LSCB_EXPECT(std::find(d.begin(), d.end(), ~pivot) != d.end(), "pivot complement missing from D");
  std::vector<Lit> out;
  std::unordered_set<Lit> seen;
  for (Lit lit : d) {
    if (lit != ~pivot && seen.insert(lit).second) out.push_back(lit);
  }
  for (Lit lit : c) {
    if (lit != pivot && seen.insert(lit).second) out.push_back(lit);
  }
  return out;
}

LearnedClause make_learned(std::vector<Lit> literals, const TrailState& trail) {
  LearnedClause out;
  out.level = clause_level(literals, trail);
  out.second_level = second_level(literals, trail);
  if (literals.empty()) {
    out.literals = std::move(literals);
    return out;
  }
  LSCB_EXPECT(count_at_level(literals, out.level, trail) == 1,
              "learned clause needs a unique literal at its level");
  auto top = std::find_if(literals.begin(), literals.end(),
                          [&](Lit l) { return trail.level(l) == out.level; });
  std::iter_swap(literals.begin(), top);
  if (literals.size() > 1) {
    auto second = std::find_if(literals.begin() + 1, literals.end(),
                               [&](Lit l) { return trail.level(l) == out.second_level; });
    std::iter_swap(literals.begin() + 1, second);
  }
  out.asserting = literals.front();
  out.literals = std::move(literals);
  return out;
}

Analysis analyze(std::span<const Lit> conflict, AnalyzeStrategy strategy, const TrailState& trail,
                 const Formula& formula) {
  Analysis result;
  std::vector<Lit> d(conflict.begin(), conflict.end());
  for (Lit lit : d) LSCB_EXPECT(trail.is_false(lit), "conflict clause is not falsified");

  while (!d.empty()) {
    const Level top = clause_level(d, trail);
    std::size_t at_top = 0;
    Lit pivot;
    std::size_t pivot_pos = 0;
    for (Lit lit : d) {
      if (trail.level(lit) != top) continue;
      ++at_top;
      const std::size_t pos = *trail.position(~lit);
      if (!pivot.defined() || pos > pivot_pos) {
        pivot = lit;
        pivot_pos = pos;
      }
    }
    const Lit on_trail = ~pivot;
    const ClauseRef lazy =
        strategy == AnalyzeStrategy::analyze2 ? trail.lazy(on_trail) : ClauseRef::none();
    if (at_top == 1 && !lazy.valid()) break;

    const ClauseRef used = lazy.valid() ? lazy : trail.reason(on_trail);
    LSCB_EXPECT(used.valid(), "analysis reached a decision above the UIP");
    d = resolve(d, formula[used].lits, on_trail);
    result.steps.push_back({on_trail, used, lazy.valid()});
    emit(trail.trace(), {.kind = EventKind::resolve,
                         .lit = on_trail,
                         .level = trail.level(on_trail),
                         .clause = used,
                         .reason_kind = lazy.valid() ? "lazy" : "reason"});
  }
  result.learned = make_learned(std::move(d), trail);
  return result;
}

namespace {

// Literal redundancy over the union of reason and lazy reason edges. Both edge
// kinds point to earlier or strictly lower assignments, so the search is acyclic.
class Minimizer {
 public:
  Minimizer(const TrailState& trail, const Formula& formula)
      : trail_(trail), formula_(formula), state_(trail.num_vars() + 1, kUnknown) {}

  void mark_in_clause(Lit lit) { state_[lit.var()] = kInClause; }

  /// True if the trail literal `t` follows from clause literals and level-0 facts.
  bool removable(Lit t) {
    for (ClauseRef candidate : {trail_.reason(t), trail_.lazy(t)}) {
      if (!candidate.valid()) continue;
      if (reason_covered(formula_[candidate], t)) return true;
    }
    return false;
  }

 private:
  static constexpr char kUnknown = 0, kInClause = 1, kRemovable = 2, kFailed = 3, kVisiting = 4;

  bool reason_covered(const Clause& reason, Lit t) {
    for (Lit q : reason.lits) {
      if (q == t) continue;
      char& s = state_[q.var()];
      if (s == kInClause || s == kRemovable) continue;
      if (s == kFailed || s == kVisiting) return false;
      s = kVisiting;
      const bool ok = removable(~q);
      s = ok ? kRemovable : kFailed;
      if (!ok) return false;
    }
    return true;
  }

  const TrailState& trail_;
  const Formula& formula_;
  std::vector<char> state_;
};

}  // namespace

LearnedClause minimize(const LearnedClause& learned, const TrailState& trail,
                       const Formula& formula) {
  if (learned.literals.size() <= 1) return learned;
  Minimizer minimizer(trail, formula);
  for (Lit lit : learned.literals) minimizer.mark_in_clause(lit);
  std::vector<Lit> kept{learned.asserting};
  for (Lit lit : learned.literals) {
    if (lit == learned.asserting) continue;
    if (!minimizer.removable(~lit)) kept.push_back(lit);
  }
  return make_learned(std::move(kept), trail);
}

}  // namespace lscb
