#include "lscb/trace.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

namespace lscb {

namespace {

constexpr std::array<std::string_view, 11> kKindNames = {
    "decide", "imply", "pop",  "set_lazy", "conflict", "resolve",
    "learn",  "backtrack", "reimply", "restart", "violation"};

// Infinite levels serialize as -1.
long long level_to_json(Level level) {
  return level.is_infinite() ? -1 : static_cast<long long>(level.value());
}

Level level_from_json(long long value) {
  return value < 0 ? Level::infinity() : Level(static_cast<std::uint32_t>(value));
}

}  // namespace

std::string_view to_string(EventKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<EventKind>(i);
  }
  return std::nullopt;
}

std::string to_json_line(const TraceEvent& event, BacktrackMode mode) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(event.kind);
  if (event.lit) j["lit"] = event.lit->to_dimacs();
  if (event.level) j["level"] = level_to_json(*event.level);
  if (event.clause) {
    if (event.clause->valid()) {
      j["clause"] = event.clause->index() + 1;
    } else {
      j["clause"] = nullptr;
    }
  }
  j["mode"] = to_string(mode);
  if (event.from_level) j["from_level"] = level_to_json(*event.from_level);
  if (event.removed) j["removed"] = *event.removed;
  if (event.head) j["head"] = *event.head;
  if (!event.reason_kind.empty()) j["reason"] = event.reason_kind;
  if (event.invariant) j["invariant"] = *event.invariant;
  if (!event.detail.empty()) j["detail"] = event.detail;
  return j.dump();
}

TraceEvent parse_json_line(const std::string& line, BacktrackMode* mode) {
  const auto j = nlohmann::json::parse(line);
  TraceEvent event;
  const auto kind = parse_event_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown trace event kind");
  event.kind = *kind;
  if (j.contains("lit")) event.lit = Lit::from_dimacs(j["lit"].get<int>());
  if (j.contains("level")) event.level = level_from_json(j["level"].get<long long>());
  if (j.contains("clause")) {
    event.clause = j["clause"].is_null()
                       ? ClauseRef::none()
                       : ClauseRef(j["clause"].get<std::uint32_t>() - 1);
  }
  if (mode) *mode = parse_mode(j.at("mode").get<std::string>());
  if (j.contains("from_level")) event.from_level = level_from_json(j["from_level"].get<long long>());
  if (j.contains("removed")) event.removed = j["removed"].get<std::uint32_t>();
  if (j.contains("head")) event.head = j["head"].get<std::uint32_t>();
  if (j.contains("reason")) event.reason_kind = j["reason"].get<std::string>();
  if (j.contains("invariant")) event.invariant = j["invariant"].get<int>();
  if (j.contains("detail")) event.detail = j["detail"].get<std::string>();
  return event;
}

void JsonlTraceSink::emit(const TraceEvent& event) {
  out_ << to_json_line(event, mode_) << '\n';
  if (!out_) throw std::runtime_error("failed to write trace record");
}

}  // namespace lscb
