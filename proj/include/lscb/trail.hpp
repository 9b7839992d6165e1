#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lscb/trace.hpp"
#include "lscb/types.hpp"

namespace lscb {

/// Observer of assignment changes (phase saving, decision heap upkeep).
class AssignmentListener {
 public:
  virtual ~AssignmentListener() = default;
  virtual void on_assign(Lit lit) = 0;
  virtual void on_unassign(Lit lit) = 0;
};

/// The partial assignment pi = tau . omega. Literals before head() are
/// propagated (tau); the rest form the propagation queue (omega).
///
/// Per-literal data (level, reason, position, lazy reason) is stored per
/// variable and reported for the literal currently on the trail. A falsified
/// literal reports the level of its complement; an unassigned one reports
/// Level::infinity().
class TrailState {
 public:
  TrailState() = default;
  explicit TrailState(std::size_t num_vars);

  std::size_t num_vars() const { return assigned_.size() - 1; }

  LitValue value(Lit lit) const {
    const Lit a = assigned_[lit.var()];
    if (a == lit) return LitValue::satisfied;
    if (a == ~lit) return LitValue::falsified;
    return LitValue::unassigned;
  }
  bool is_true(Lit lit) const { return assigned_[lit.var()] == lit; }
  bool is_false(Lit lit) const { return assigned_[lit.var()] == ~lit; }
  bool is_assigned(Var var) const { return assigned_[var].defined(); }

  Level level(Lit lit) const { return level_[lit.var()]; }
  /// Reason of the trail literal on lit's variable; none for decisions and
  /// unassigned variables.
  ClauseRef reason(Lit lit) const { return reason_[lit.var()]; }
  /// lambda(lit): only defined while lit itself is on the trail.
  ClauseRef lazy(Lit lit) const { return is_true(lit) ? lazy_[lit.var()] : ClauseRef::none(); }
  /// Cached level of lambda(lit) \ {lit}; infinity when lambda(lit) is undefined.
  Level lazy_level(Lit lit) const {
    return is_true(lit) ? lazy_level_[lit.var()] : Level::infinity();
  }
  /// Position of lit in the trail if lit is on it.
  std::optional<std::size_t> position(Lit lit) const {
    if (!is_true(lit)) return std::nullopt;
    return pos_[lit.var()];
  }
  bool is_decision(Lit lit) const { return is_true(lit) && decision_[lit.var()]; }
  /// True when lit is on the propagated prefix tau.
  bool in_tau(Lit lit) const { return is_true(lit) && pos_[lit.var()] < head_; }

  std::span<const Lit> trail() const { return trail_; }
  std::size_t size() const { return trail_.size(); }
  std::size_t head() const { return head_; }
  bool queue_empty() const { return head_ == trail_.size(); }
  std::span<const Lit> decisions() const { return decisions_; }
  Level decision_level() const { return Level(static_cast<std::uint32_t>(decisions_.size())); }

  void enqueue_decision(Lit lit);
  void enqueue_implied(Lit lit, ClauseRef reason, Level level, bool reimplied = false);
  Lit peek_next() const;
  /// Moves the first literal of omega into tau and returns it.
  Lit pop_next();
  void set_lazy(Lit lit, ClauseRef clause, Level residual_level);

  /// Removes every literal above `level` in one order-preserving pass.
  /// `on_remove` sees each removed literal before its data is cleared.
  /// Returns how many kept literals were in tau.
  std::size_t remove_above(Level level, const std::function<void(Lit)>& on_remove);
  void set_head(std::size_t head);

  void set_listener(AssignmentListener* listener) { listener_ = listener; }
  void set_trace(TraceSink* trace) { trace_ = trace; }
  TraceSink* trace() const { return trace_; }

 private:
  void assign(Lit lit, ClauseRef reason, Level level, bool decision);

  std::vector<Lit> assigned_{Lit::undef()};
  std::vector<Level> level_{Level::infinity()};
  std::vector<ClauseRef> reason_{ClauseRef::none()};
  std::vector<ClauseRef> lazy_{ClauseRef::none()};
  std::vector<Level> lazy_level_{Level::infinity()};
  std::vector<std::size_t> pos_{0};
  std::vector<char> decision_{0};

  std::vector<Lit> trail_;
  std::vector<Lit> decisions_;
  std::size_t head_ = 0;

  AssignmentListener* listener_ = nullptr;
  TraceSink* trace_ = nullptr;
};

}  // namespace lscb
