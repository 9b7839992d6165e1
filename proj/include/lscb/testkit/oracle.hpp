#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lscb/formula.hpp"

namespace lscb::testkit {

class OracleLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kTruthTableLimit = 26;
inline constexpr std::size_t kDpllLimit = 60;

/// Full enumeration. Throws OracleLimit above kTruthTableLimit variables.
/// Returns a model (index 0 unused) if one exists.
std::optional<std::vector<bool>> truth_table(const Formula& formula);

/// Recursive DPLL with unit propagation by full clause scans and no learning.
/// Throws OracleLimit above kDpllLimit variables.
std::optional<std::vector<bool>> dpll(const Formula& formula);

/// Exact satisfiability: enumeration on small formulas, DPLL otherwise.
bool brute_force(const Formula& formula);

/// True iff every model of `formula` satisfies `clause`.
bool entails(const Formula& formula, std::span<const Lit> clause);

/// Clause-by-clause evaluation of a total assignment.
bool evaluate(const Formula& formula, const std::vector<bool>& model);

}  // namespace lscb::testkit
