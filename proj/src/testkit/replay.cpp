#include "lscb/testkit/replay.hpp"

#include <algorithm>

namespace lscb::testkit {

void TrailReplayer::apply(const TraceEvent& e) {
  switch (e.kind) {
    case EventKind::decide:
    case EventKind::imply:
    case EventKind::reimply:
      LSCB_EXPECT(e.lit && e.level, "assignment event without literal or level");
      trail_.push_back({*e.lit, *e.level});
      break;
    case EventKind::pop:
      ++head_;
      break;
    case EventKind::backtrack: {
      LSCB_EXPECT(e.level.has_value(), "backtrack event without level");
      const Level target = *e.level;
      std::erase_if(trail_, [&](const ReplayedLiteral& r) { return r.level > target; });
      if (e.head) head_ = *e.head;
      break;
    }
    default:
      break;
  }
}

std::vector<ReplayedLiteral> replay_trail(const std::vector<TraceEvent>& events) {
  TrailReplayer r;
  for (const auto& e : events) r.apply(e);
  return r.trail();
}

}  // namespace lscb::testkit
