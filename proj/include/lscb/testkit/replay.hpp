#pragma once

#include <vector>

#include "lscb/trace.hpp"

namespace lscb::testkit {

struct ReplayedLiteral {
  Lit lit;
  Level level;
  bool operator==(const ReplayedLiteral&) const = default;
};

/// Reference interpreter for a solver event stream: rebuilds the trail from
/// decide, imply, reimply, pop and backtrack events.
class TrailReplayer {
 public:
  void apply(const TraceEvent& event);
  const std::vector<ReplayedLiteral>& trail() const { return trail_; }
  std::size_t head() const { return head_; }

 private:
  std::vector<ReplayedLiteral> trail_;
  std::size_t head_ = 0;
};

std::vector<ReplayedLiteral> replay_trail(const std::vector<TraceEvent>& events);

}  // namespace lscb::testkit
