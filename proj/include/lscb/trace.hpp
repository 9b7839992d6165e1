#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lscb/types.hpp"

namespace lscb {

enum class EventKind : std::uint8_t {
  decide,
  imply,
  pop,
  set_lazy,
  conflict,
  resolve,
  learn,
  backtrack,
  reimply,
  restart,
  violation,
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);

/// One solver state transition. Fields that do not apply to a kind stay empty.
struct TraceEvent {
  EventKind kind = EventKind::decide;
  std::optional<Lit> lit;
  std::optional<Level> level;
  std::optional<ClauseRef> clause;
  // backtrack
  std::optional<Level> from_level;
  std::optional<std::uint32_t> removed;
  std::optional<std::uint32_t> head;
  // resolve: "reason" or "lazy"
  std::string reason_kind;
  // violation
  std::optional<int> invariant;
  std::string detail;
};

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void emit(const TraceEvent& event) = 0;
};

/// Keeps every event in memory; used by tests and the replay checker.
class MemoryTraceSink final : public TraceSink {
 public:
  void emit(const TraceEvent& event) override { events.push_back(event); }
  std::vector<TraceEvent> events;
};

/// Writes one JSON object per line. Field names: kind, lit, level, clause,
/// mode, and kind-specific from_level, removed, head, reason, invariant,
/// detail. Literals use DIMACS integers and clause ids are 1-based.
class JsonlTraceSink final : public TraceSink {
 public:
  JsonlTraceSink(std::ostream& out, BacktrackMode mode) : out_(out), mode_(mode) {}
  void emit(const TraceEvent& event) override;

 private:
  std::ostream& out_;
  BacktrackMode mode_;
};

std::string to_json_line(const TraceEvent& event, BacktrackMode mode);
/// Inverse of to_json_line; the mode is returned through `mode`.
TraceEvent parse_json_line(const std::string& line, BacktrackMode* mode = nullptr);

/// Null-safe emission helper.
inline void emit(TraceSink* sink, const TraceEvent& event) {
  if (sink) sink->emit(event);
}

}  // namespace lscb
