#include "lscb/trail.hpp"

namespace lscb {

TrailState::TrailState(std::size_t num_vars)
    : assigned_(num_vars + 1, Lit::undef()),
      level_(num_vars + 1, Level::infinity()),
      reason_(num_vars + 1, ClauseRef::none()),
      lazy_(num_vars + 1, ClauseRef::none()),
      lazy_level_(num_vars + 1, Level::infinity()),
      pos_(num_vars + 1, 0),
      decision_(num_vars + 1, 0) {
  trail_.reserve(num_vars);
}

void TrailState::assign(Lit lit, ClauseRef reason, Level level, bool decision) {
  LSCB_EXPECT(lit.defined() && lit.var() <= num_vars(), "literal outside the variable range");
  LSCB_EXPECT(!is_assigned(lit.var()), "variable is already assigned");
  const Var v = lit.var();
  assigned_[v] = lit;
  level_[v] = level;
  reason_[v] = reason;
  pos_[v] = trail_.size();
  decision_[v] = decision ? 1 : 0;
  trail_.push_back(lit);
  if (listener_) listener_->on_assign(lit);
}

void TrailState::enqueue_decision(Lit lit) {
  decisions_.push_back(lit);
  assign(lit, ClauseRef::none(), decision_level(), true);
  emit(trace_, {.kind = EventKind::decide, .lit = lit, .level = decision_level()});
}

void TrailState::enqueue_implied(Lit lit, ClauseRef reason, Level level, bool reimplied) {
  LSCB_EXPECT(reason.valid(), "implied literal needs a reason");
  LSCB_EXPECT(!level.is_infinite() && level <= decision_level(),
              "implication level exceeds the decision level");
  assign(lit, reason, level, false);
  emit(trace_, {.kind = reimplied ? EventKind::reimply : EventKind::imply,
                .lit = lit,
                .level = level,
                .clause = reason});
}

Lit TrailState::peek_next() const {
  LSCB_EXPECT(head_ < trail_.size(), "propagation queue is empty");
  return trail_[head_];
}

Lit TrailState::pop_next() {
  const Lit lit = peek_next();
  ++head_;
  emit(trace_, {.kind = EventKind::pop, .lit = lit, .level = level(lit)});
  return lit;
}

void TrailState::set_lazy(Lit lit, ClauseRef clause, Level residual_level) {
  LSCB_EXPECT(is_true(lit), "lazy reason set for a literal not on the trail");
  LSCB_EXPECT(clause.valid(), "lazy reason must be a clause");
  LSCB_EXPECT(residual_level < level(lit), "lazy reason is not a lower implication");
  LSCB_EXPECT(residual_level < lazy_level(lit), "lazy reason does not improve the stored one");
  lazy_[lit.var()] = clause;
  lazy_level_[lit.var()] = residual_level;
  emit(trace_, {.kind = EventKind::set_lazy, .lit = lit, .level = residual_level, .clause = clause});
}

std::size_t TrailState::remove_above(Level level, const std::function<void(Lit)>& on_remove) {
  std::size_t write = 0;
  std::size_t kept_in_tau = 0;
  for (std::size_t read = 0; read < trail_.size(); ++read) {
    const Lit lit = trail_[read];
    const Var v = lit.var();
    if (level_[v] > level) {
      if (on_remove) on_remove(lit);
      assigned_[v] = Lit::undef();
      level_[v] = Level::infinity();
      reason_[v] = ClauseRef::none();
      lazy_[v] = ClauseRef::none();
      lazy_level_[v] = Level::infinity();
      decision_[v] = 0;
      if (listener_) listener_->on_unassign(lit);
      continue;
    }
    if (read < head_) ++kept_in_tau;
    pos_[v] = write;
    trail_[write++] = lit;
  }
  trail_.resize(write);
  std::erase_if(decisions_, [&](Lit d) { return !is_true(d); });
  head_ = kept_in_tau;
  return kept_in_tau;
}

void TrailState::set_head(std::size_t head) {
  LSCB_EXPECT(head <= trail_.size(), "head beyond the trail");
  head_ = head;
}

}  // namespace lscb
