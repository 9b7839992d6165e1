#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lscb/analyze.hpp"
#include "lscb/checker.hpp"
#include "lscb/formula.hpp"
#include "lscb/heuristics.hpp"
#include "lscb/propagate.hpp"
#include "lscb/stats.hpp"
#include "lscb/trail.hpp"

namespace lscb {

enum class RestartPolicy : std::uint8_t { off, agility };
enum class CheckLevel : std::uint8_t { off, coarse, fine };

std::string_view to_string(RestartPolicy policy);
std::string_view to_string(CheckLevel level);
RestartPolicy parse_restarts(std::string_view text);
CheckLevel parse_check_level(std::string_view text);

struct SolverConfig {
  BacktrackMode mode = BacktrackMode::lscb;
  AnalyzeStrategy analyze = AnalyzeStrategy::analyze2;
  /// Chronological backtracking kicks in once the backjump would skip at
  /// least this many levels; 1 makes every CB-mode backtrack chronological.
  std::uint32_t cb_threshold = 100;
  bool minimize = false;
  bool blockers = false;
  RestartPolicy restarts = RestartPolicy::off;
  double vsids_decay = 0.95;
  double agility_decay = 0.9999;
  double agility_limit = 0.20;
  std::uint64_t seed = 0;
  CheckLevel check_level = CheckLevel::off;

  void validate() const;
};

enum class Result : std::uint8_t { sat, unsat };

struct Verdict {
  Result result = Result::unsat;
  /// model[v] is the value of variable v; index 0 is unused. Empty on UNSAT.
  std::vector<bool> model;

  bool sat() const { return result == Result::sat; }
};

/// Truth value of every clause of `formula` under `model`.
bool satisfies(const Formula& formula, const std::vector<bool>& model);

enum class Checkpoint : std::uint8_t { bcp, pop, backtrack, decide };

/// Result of conflict handling. `final_clause` is the clause that ended up
/// installed (or empty on UNSAT); `analyses` counts analysis rounds, which is
/// more than one only when analyze1 meets a clause that is falsified again
/// after backtracking.
struct ConflictOutcome {
  bool unsat = false;
  LearnedClause final_clause;
  std::uint32_t analyses = 0;
};

/// CDCL search over one formula. The step API (init, propagate, decide,
/// handle_conflict) is public so tests can drive the search by hand; solve()
/// runs the whole loop.
class Solver {
 public:
  explicit Solver(Formula formula, SolverConfig config = {});
  /// Copies the full search state. The copy has no trace sink or observers.
  Solver(const Solver& other);
  /// Copy that continues under `config`. Only the analysis and learning
  /// policy may differ; the backtracking mode and blockers must match.
  Solver(const Solver& other, const SolverConfig& config);
  Solver& operator=(const Solver&) = delete;

  const SolverConfig& config() const { return config_; }
  const Formula& formula() const { return formula_; }
  const TrailState& trail() const { return trail_; }
  const WatchLists& watches() const { return watches_; }
  const Stats& stats() const { return stats_; }
  const VarOrder& order() const { return order_; }
  const Agility& agility() const { return agility_; }
  bool saved_phase(Var v) const { return phase_[v] != 0; }

  void set_trace(TraceSink* sink);

  /// Called with each learned clause before and after minimization.
  using LearnedObserver = std::function<void(const Solver&, const LearnedClause& analyzed,
                                             const LearnedClause& minimized)>;
  void set_learned_observer(LearnedObserver observer) { on_learned_ = std::move(observer); }
  /// Called after each checkpoint evaluation with that checkpoint's findings.
  using CheckObserver =
      std::function<void(const Solver&, Checkpoint, const InvariantReport&)>;
  void set_check_observer(CheckObserver observer) { on_check_ = std::move(observer); }
  /// Called at every conflict before it is handled.
  using ConflictObserver = std::function<void(const Solver&, ClauseRef conflict)>;
  void set_conflict_observer(ConflictObserver observer) { on_conflict_ = std::move(observer); }

  /// Violations seen at checkpoints so far, per invariant id.
  const InvariantReport& violations() const { return violations_; }

  /// Watches every stored clause and enqueues root units. Returns false when
  /// the formula is trivially unsatisfiable. Idempotent.
  bool init();
  /// Adds a clause before init(). `watch` overrides the initial watch slots.
  AddResult add_clause(std::vector<Lit> lits, std::optional<std::array<std::uint32_t, 2>> watch = {});

  PropagationOutcome propagate();
  void decide(Lit lit);
  /// VSIDS choice with saved phase. Requires an unassigned variable.
  Lit pick_branch();
  bool complete() const { return trail_.size() == formula_.num_vars() && trail_.queue_empty(); }

  /// Runs analysis, backtracking and clause installation for `conflict`.
  ConflictOutcome handle_conflict(ClauseRef conflict);
  Level choose_backtrack_level(const LearnedClause& learned) const;
  /// `pending` is a conflict clause still awaiting its learned clause; the
  /// checkpoint after the backtrack does not hold its watches to account.
  void backtrack_to(Level level, ClauseRef pending = ClauseRef::none());
  /// Adds the learned clause (unless it equals `conflict`) and enqueues its
  /// asserting literal. The clause must have exactly one unassigned literal.
  ClauseRef install_learned(const LearnedClause& learned, ClauseRef conflict);
  /// Restarts when the policy asks for it; returns true if it did.
  bool maybe_restart();

  Verdict solve();
  Verdict model_verdict() const;

 private:
  class Listener final : public AssignmentListener {
   public:
    explicit Listener(Solver& s) : s_(&s) {}
    void on_assign(Lit lit) override;
    void on_unassign(Lit lit) override;

   private:
    Solver* s_;
  };

  Propagator propagator() {
    return Propagator(formula_, trail_, watches_, stats_, {config_.mode, config_.blockers});
  }
  void checkpoint(Checkpoint kind, ClauseRef conflict = ClauseRef::none());
  void bump_clause(const std::vector<Lit>& lits);
  void seed_activities();

  SolverConfig config_;
  Formula formula_;
  TrailState trail_;
  WatchLists watches_;
  Stats stats_;
  VarOrder order_;
  std::vector<char> phase_;
  Agility agility_;
  Listener listener_;
  TraceSink* trace_ = nullptr;
  bool initialized_ = false;
  bool root_conflict_ = false;
  InvariantReport violations_;

  LearnedObserver on_learned_;
  CheckObserver on_check_;
  ConflictObserver on_conflict_;
};

/// Convenience wrapper: constructs a solver and runs it.
Verdict solve(const Formula& formula, const SolverConfig& config, Stats* stats = nullptr);

}  // namespace lscb
