#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lscb {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define LSCB_EXPECT(cond, msg)                                   \
  do {                                                           \
    if (!(cond)) throw ::lscb::ContractViolation(msg);           \
  } while (false)

using Var = std::uint32_t;

/// Boolean literal encoded as 2 * var + sign so it can index arrays directly.
/// Variables are 1-based; code 0 and 1 are reserved for the undefined literal.
class Lit {
 public:
  constexpr Lit() = default;

  static constexpr Lit make(Var var, bool negative) {
    return Lit(2 * var + (negative ? 1u : 0u));
  }
  static constexpr Lit positive(Var var) { return make(var, false); }
  static constexpr Lit negative(Var var) { return make(var, true); }
  static constexpr Lit from_code(std::uint32_t code) { return Lit(code); }
  static Lit from_dimacs(int value) {
    return make(static_cast<Var>(std::abs(value)), value < 0);
  }
  static constexpr Lit undef() { return Lit(); }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_negative() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr bool defined() const { return code_ >= 2; }
  int to_dimacs() const {
    const int v = static_cast<int>(var());
    return is_negative() ? -v : v;
  }

  constexpr Lit operator~() const { return Lit(code_ ^ 1u); }
  constexpr auto operator<=>(const Lit&) const = default;

 private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Lit lit) {
  if (!lit.defined()) return os << "undef";
  return os << lit.to_dimacs();
}

/// Decision level. The infinite level is what unassigned literals and the
/// undefined clause carry; it compares greater than every finite level.
class Level {
 public:
  constexpr Level() = default;
  constexpr explicit Level(std::uint32_t value) : value_(value) {}

  static constexpr Level infinity() {
    return Level(std::numeric_limits<std::uint32_t>::max());
  }
  constexpr bool is_infinite() const { return *this == infinity(); }
  constexpr std::uint32_t value() const { return value_; }

  constexpr auto operator<=>(const Level&) const = default;

 private:
  std::uint32_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Level level) {
  if (level.is_infinite()) return os << "inf";
  return os << level.value();
}

/// Stable handle into the clause store. The default value is the undefined
/// clause.
class ClauseRef {
 public:
  constexpr ClauseRef() = default;
  constexpr explicit ClauseRef(std::uint32_t index) : index_(index) {}

  static constexpr ClauseRef none() { return ClauseRef(); }
  constexpr bool valid() const { return index_ != kNone; }
  constexpr std::uint32_t index() const { return index_; }

  constexpr auto operator<=>(const ClauseRef&) const = default;

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t index_ = kNone;
};

enum class LitValue : std::uint8_t { unassigned, satisfied, falsified };

enum class BacktrackMode : std::uint8_t { ncb, wcb, rscb, lscb };

enum class AnalyzeStrategy : std::uint8_t { analyze1, analyze2 };

std::string_view to_string(BacktrackMode mode);
BacktrackMode parse_mode(std::string_view text);

}  // namespace lscb

template <>
struct std::hash<lscb::Lit> {
  std::size_t operator()(lscb::Lit lit) const noexcept { return lit.code(); }
};
