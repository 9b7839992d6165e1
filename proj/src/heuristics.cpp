#include "lscb/heuristics.hpp"

namespace lscb {

VarOrder::VarOrder(std::size_t num_vars, double decay)
    : activity_(num_vars + 1, 0.0), index_(num_vars + 1, kAbsent), decay_(decay) {
  LSCB_EXPECT(decay > 0.0 && decay < 1.0, "decay must lie in (0,1)");
  heap_.reserve(num_vars);
  for (Var v = 1; v <= num_vars; ++v) insert(v);
}

void VarOrder::set_activity(Var v, double value) {
  const double old = activity_[v];
  activity_[v] = value;
  if (!contains(v)) return;
  if (value > old) {
    sift_up(index_[v]);
  } else {
    sift_down(index_[v]);
  }
}

void VarOrder::bump(Var v) {
  activity_[v] += increment_;
  if (activity_[v] > kRescaleLimit) {
    for (double& a : activity_) a *= 1.0 / kRescaleLimit;
    increment_ *= 1.0 / kRescaleLimit;
  }
  if (contains(v)) sift_up(index_[v]);
}

void VarOrder::decay() { increment_ /= decay_; }

void VarOrder::insert(Var v) {
  if (contains(v)) return;
  heap_.push_back(v);
  index_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
  sift_up(index_[v]);
}

Var VarOrder::pop() {
  LSCB_EXPECT(!heap_.empty(), "pop from an empty variable heap");
  const Var v = heap_.front();
  const Var last = heap_.back();
  heap_.pop_back();
  index_[v] = kAbsent;
  if (!heap_.empty()) {
    place(0, last);
    sift_down(0);
  }
  return v;
}

void VarOrder::sift_up(std::uint32_t i) {
  const Var v = heap_[i];
  while (i > 0) {
    const std::uint32_t parent = (i - 1) / 2;
    if (!before(v, heap_[parent])) break;
    place(i, heap_[parent]);
    i = parent;
  }
  place(i, v);
}

void VarOrder::sift_down(std::uint32_t i) {
  const Var v = heap_[i];
  const auto n = static_cast<std::uint32_t>(heap_.size());
  while (true) {
    std::uint32_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
    if (!before(heap_[child], v)) break;
    place(i, heap_[child]);
    i = child;
  }
  place(i, v);
}

}  // namespace lscb
