#pragma once

#include <cstdint>
#include <vector>

#include "lscb/types.hpp"

namespace lscb {

/// VSIDS activities with an indexed binary max-heap of candidate variables.
/// Equal activities are ordered by the lower variable index.
class VarOrder {
 public:
  VarOrder() = default;
  VarOrder(std::size_t num_vars, double decay);

  double activity(Var v) const { return activity_[v]; }
  void set_activity(Var v, double value);
  void bump(Var v);
  /// Grows the bump increment, which decays every other activity relative to it.
  void decay();

  bool contains(Var v) const { return index_[v] != kAbsent; }
  bool empty() const { return heap_.empty(); }
  void insert(Var v);
  Var top() const { return heap_.front(); }
  Var pop();

  double increment() const { return increment_; }

  static constexpr double kRescaleLimit = 1e100;

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  bool before(Var a, Var b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }
  void sift_up(std::uint32_t i);
  void sift_down(std::uint32_t i);
  void place(std::uint32_t i, Var v) {
    heap_[i] = v;
    index_[v] = i;
  }

  std::vector<double> activity_{0.0};
  std::vector<std::uint32_t> index_{kAbsent};
  std::vector<Var> heap_;
  double increment_ = 1.0;
  double decay_ = 0.95;
};

/// Exponential moving average of polarity flips against the saved phase.
class Agility {
 public:
  explicit Agility(double decay = 0.9999) : decay_(decay) {}

  void update(bool flipped) { value_ = decay_ * value_ + (flipped ? 1.0 - decay_ : 0.0); }
  double value() const { return value_; }
  void reset() { value_ = 1.0; }

 private:
  double decay_;
  double value_ = 1.0;
};

}  // namespace lscb
