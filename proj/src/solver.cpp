#include "lscb/solver.hpp"

#include <algorithm>
#include <random>

#include "lscb/backtrack.hpp"

namespace lscb {

std::string_view to_string(RestartPolicy policy) {
  return policy == RestartPolicy::off ? "off" : "agility";
}

std::string_view to_string(CheckLevel level) {
  switch (level) {
    case CheckLevel::off: return "off";
    case CheckLevel::coarse: return "coarse";
    case CheckLevel::fine: return "fine";
  }
  return "off";
}

RestartPolicy parse_restarts(std::string_view text) {
  if (text == "off") return RestartPolicy::off;
  if (text == "agility") return RestartPolicy::agility;
  throw std::invalid_argument("unknown restart policy: " + std::string(text));
}

CheckLevel parse_check_level(std::string_view text) {
  if (text == "off") return CheckLevel::off;
  if (text == "coarse") return CheckLevel::coarse;
  if (text == "fine") return CheckLevel::fine;
  throw std::invalid_argument("unknown check level: " + std::string(text));
}

void SolverConfig::validate() const {
  LSCB_EXPECT(cb_threshold >= 1, "cb_threshold must be at least 1");
  LSCB_EXPECT(vsids_decay > 0.0 && vsids_decay < 1.0, "vsids_decay must lie in (0,1)");
  LSCB_EXPECT(agility_decay > 0.0 && agility_decay < 1.0, "agility_decay must lie in (0,1)");
  LSCB_EXPECT(agility_limit > 0.0 && agility_limit < 1.0, "agility_limit must lie in (0,1)");
}

bool satisfies(const Formula& formula, const std::vector<bool>& model) {
  if (formula.trivially_unsat()) return false;
  for (const Clause& c : formula.clauses()) {
    const bool sat = std::any_of(c.lits.begin(), c.lits.end(), [&](Lit l) {
      return l.var() < model.size() && model[l.var()] != l.is_negative();
    });
    if (!sat) return false;
  }
  return true;
}

void Solver::Listener::on_assign(Lit lit) {
  char& saved = s_->phase_[lit.var()];
  const char now = lit.is_negative() ? 0 : 1;
  s_->agility_.update(saved != now);
  saved = now;
}

void Solver::Listener::on_unassign(Lit lit) { s_->order_.insert(lit.var()); }

Solver::Solver(Formula formula, SolverConfig config)
    : config_(config),
      formula_(std::move(formula)),
      trail_(formula_.num_vars()),
      watches_(formula_.num_vars()),
      order_(formula_.num_vars(), config.vsids_decay),
      phase_(formula_.num_vars() + 1, 0),
      agility_(config.agility_decay),
      listener_(*this) {
  config_.validate();
  trail_.set_listener(&listener_);
  seed_activities();
}

Solver::Solver(const Solver& other)
    : config_(other.config_),
      formula_(other.formula_),
      trail_(other.trail_),
      watches_(other.watches_),
      stats_(other.stats_),
      order_(other.order_),
      phase_(other.phase_),
      agility_(other.agility_),
      listener_(*this),
      initialized_(other.initialized_),
      root_conflict_(other.root_conflict_),
      violations_(other.violations_) {
  trail_.set_listener(&listener_);
  trail_.set_trace(nullptr);
}

Solver::Solver(const Solver& other, const SolverConfig& config) : Solver(other) {
  config.validate();
  LSCB_EXPECT(config.mode == config_.mode && config.blockers == config_.blockers,
              "copy may not change the backtracking mode or blockers");
  config_ = config;
}

void Solver::seed_activities() {
  if (config_.seed == 0) return;
  // Tiny jitter only breaks ties; any real bump dominates it.
  std::mt19937_64 rng(config_.seed);
  for (Var v = 1; v <= formula_.num_vars(); ++v) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    order_.set_activity(v, unit * 1e-6);
  }
}

void Solver::set_trace(TraceSink* sink) {
  trace_ = sink;
  trail_.set_trace(sink);
}

AddResult Solver::add_clause(std::vector<Lit> lits,
                             std::optional<std::array<std::uint32_t, 2>> watch) {
  LSCB_EXPECT(!initialized_, "clauses must be added before init()");
  const AddResult result = formula_.add_clause(std::move(lits));
  if (watch && result.status == AddStatus::stored) {
    Clause& c = formula_[result.ref];
    LSCB_EXPECT((*watch)[0] < c.size() && (*watch)[1] < c.size() && (*watch)[0] != (*watch)[1],
                "watch slots must index two distinct literals");
    c.watch = *watch;
    c.blocker = c.watched_lit(1);
  }
  return result;
}

bool Solver::init() {
  if (initialized_) return !root_conflict_ && !formula_.trivially_unsat();
  initialized_ = true;
  if (formula_.trivially_unsat()) {
    root_conflict_ = true;
    return false;
  }
  for (std::uint32_t i = 0; i < formula_.num_clauses(); ++i) {
    if (formula_.clauses()[i].watched()) watches_.attach(formula_, ClauseRef(i));
  }
  for (ClauseRef unit : formula_.units()) {
    const Lit lit = formula_[unit].lits[0];
    if (trail_.is_false(lit)) {
      root_conflict_ = true;
      return false;
    }
    if (!trail_.is_true(lit)) trail_.enqueue_implied(lit, unit, Level(0));
  }
  return true;
}

void Solver::checkpoint(Checkpoint kind, ClauseRef conflict) {
  if (config_.check_level == CheckLevel::off) return;
  if (kind == Checkpoint::pop && config_.check_level != CheckLevel::fine) return;
  const InvariantReport report = check_all(trail_, formula_, config_.blockers, conflict);
  violations_.merge(report);
  if (trace_) {
    for (const Violation& v : report.samples) {
      emit(trace_, {.kind = EventKind::violation,
                    .lit = v.lit.defined() ? std::optional<Lit>(v.lit) : std::nullopt,
                    .clause = v.clause.valid() ? std::optional<ClauseRef>(v.clause) : std::nullopt,
                    .invariant = v.invariant,
                    .detail = v.detail});
    }
  }
  if (on_check_) on_check_(*this, kind, report);
}

PropagationOutcome Solver::propagate() {
  LSCB_EXPECT(initialized_, "init() must run before propagation");
  std::function<void()> after_pop;
  if (config_.check_level == CheckLevel::fine) after_pop = [this] { checkpoint(Checkpoint::pop); };
  const PropagationOutcome outcome = propagator().bcp(after_pop);
  if (outcome.conflict()) {
    emit(trace_, {.kind = EventKind::conflict,
                  .level = clause_level(formula_[outcome.conflict_clause].lits, trail_),
                  .clause = outcome.conflict_clause});
  }
  checkpoint(Checkpoint::bcp, outcome.conflict_clause);
  return outcome;
}

void Solver::decide(Lit lit) {
  ++stats_.decisions;
  trail_.enqueue_decision(lit);
  checkpoint(Checkpoint::decide);
}

Lit Solver::pick_branch() {
  while (!order_.empty() && trail_.is_assigned(order_.top())) order_.pop();
  LSCB_EXPECT(!order_.empty(), "no unassigned variable left to decide");
  const Var v = order_.top();
  return Lit::make(v, phase_[v] == 0);
}

Level Solver::choose_backtrack_level(const LearnedClause& learned) const {
  LSCB_EXPECT(learned.level > Level(0), "a level-0 clause has no backtrack target");
  if (config_.mode == BacktrackMode::ncb) return learned.second_level;
  const std::uint32_t gap = learned.level.value() - learned.second_level.value();
  if (gap > config_.cb_threshold) return Level(learned.level.value() - 1);
  return learned.second_level;
}

void Solver::backtrack_to(Level level, ClauseRef pending) {
  lscb::backtrack(trail_, formula_, config_.mode, level, stats_);
  checkpoint(Checkpoint::backtrack, pending);
}

void Solver::bump_clause(const std::vector<Lit>& lits) {
  for (Lit l : lits) order_.bump(l.var());
  order_.decay();
}

namespace {

bool same_set(std::span<const Lit> a, std::span<const Lit> b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](Lit l) { return std::find(b.begin(), b.end(), l) != b.end(); });
}

}  // namespace

ClauseRef Solver::install_learned(const LearnedClause& learned, ClauseRef conflict) {
  const Lit asserting = learned.asserting;
  LSCB_EXPECT(trail_.value(asserting) == LitValue::unassigned,
              "asserting literal must be unassigned after backtracking");
  for (Lit l : learned.literals) {
    LSCB_EXPECT(l == asserting || trail_.is_false(l), "learned clause is not unit");
  }

  ClauseRef ref;
  if (conflict.valid() && same_set(learned.literals, formula_[conflict].lits)) {
    ref = conflict;
    Clause& c = formula_[ref];
    watches_.detach(formula_, ref);
    const auto index_of = [&](Lit l) {
      return static_cast<std::uint32_t>(std::find(c.lits.begin(), c.lits.end(), l) - c.lits.begin());
    };
    c.watch = {index_of(learned.literals[0]), index_of(learned.literals[1])};
    c.blocker = c.watched_lit(1);
    watches_.attach(formula_, ref);
  } else {
    const AddResult added = formula_.add_clause(learned.literals, /*learned=*/true);
    LSCB_EXPECT(added.status == AddStatus::stored || added.status == AddStatus::unit,
                "learned clause could not be stored");
    ref = added.ref;
    if (formula_[ref].watched()) watches_.attach(formula_, ref);
  }
  ++stats_.learned;
  const Level level = learned.literals.size() > 1 ? learned.second_level : Level(0);
  emit(trace_, {.kind = EventKind::learn, .lit = asserting, .level = level, .clause = ref});
  trail_.enqueue_implied(asserting, ref, level);
  return ref;
}

ConflictOutcome Solver::handle_conflict(ClauseRef conflict) {
  ++stats_.conflicts;
  if (on_conflict_) on_conflict_(*this, conflict);

  ConflictOutcome out;
  std::vector<Lit> current = formula_[conflict].lits;
  while (true) {
    ++out.analyses;
    const Analysis analysis = analyze(current, config_.analyze, trail_, formula_);
    const LearnedClause learned =
        config_.minimize ? minimize(analysis.learned, trail_, formula_) : analysis.learned;
    if (on_learned_) on_learned_(*this, analysis.learned, learned);
    bump_clause(learned.literals);

    if (learned.level == Level(0)) {
      emit(trace_, {.kind = EventKind::learn, .level = Level(0)});
      root_conflict_ = true;
      out.unsat = true;
      out.final_clause = learned;
      return out;
    }
    backtrack_to(choose_backtrack_level(learned), conflict);

    if (trail_.value(learned.asserting) == LitValue::unassigned) {
      install_learned(learned, conflict);
      out.final_clause = learned;
      return out;
    }
    // The asserting literal was reimplied from a lazy reason, so the clause
    // is falsified again and gets analyzed at the lower level.
    LSCB_EXPECT(config_.mode == BacktrackMode::lscb && config_.analyze == AnalyzeStrategy::analyze1,
                "learned clause is falsified after backtracking");
    ++stats_.conflicts;
    emit(trace_, {.kind = EventKind::conflict,
                  .level = clause_level(learned.literals, trail_),
                  .detail = "learned clause falsified again"});
    current = learned.literals;
  }
}

bool Solver::maybe_restart() {
  if (config_.restarts == RestartPolicy::off) return false;
  if (trail_.decision_level() == Level(0)) return false;
  if (agility_.value() >= config_.agility_limit) return false;
  backtrack_to(Level(0));
  ++stats_.restarts;
  agility_.reset();
  emit(trace_, {.kind = EventKind::restart, .level = Level(0)});
  return true;
}

Verdict Solver::model_verdict() const {
  Verdict v{Result::sat, std::vector<bool>(formula_.num_vars() + 1, false)};
  for (Var x = 1; x <= formula_.num_vars(); ++x) v.model[x] = trail_.is_true(Lit::positive(x));
  return v;
}

Verdict Solver::solve() {
  if (!init()) return {Result::unsat, {}};
  if (root_conflict_) return {Result::unsat, {}};
  while (true) {
    const PropagationOutcome outcome = propagate();
    if (outcome.conflict()) {
      if (handle_conflict(outcome.conflict_clause).unsat) return {Result::unsat, {}};
      continue;
    }
    if (complete()) return model_verdict();
    if (maybe_restart()) continue;
    decide(pick_branch());
  }
}

Verdict solve(const Formula& formula, const SolverConfig& config, Stats* stats) {
  Solver solver(formula, config);
  Verdict v = solver.solve();
  if (stats) *stats = solver.stats();
  return v;
}

}  // namespace lscb
