#pragma once

#include <cstdint>
#include <ostream>

namespace lscb {

/// Search counters. All are monotone during a solve.
struct Stats {
  std::uint64_t propagations = 0;
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned = 0;
  std::uint64_t reimplications = 0;
  std::uint64_t mli_detected = 0;
  std::uint64_t restarts = 0;

  bool operator==(const Stats&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Stats& s) {
  return os << "propagations=" << s.propagations << " decisions=" << s.decisions
            << " conflicts=" << s.conflicts << " learned=" << s.learned
            << " reimplications=" << s.reimplications << " mli=" << s.mli_detected
            << " restarts=" << s.restarts;
}

}  // namespace lscb
