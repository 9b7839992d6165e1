#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lscb/types.hpp"

namespace lscb {

/// Disjunction of literals. Clauses with two or more literals are watched by
/// the literals at positions watch[0] and watch[1].
struct Clause {
  std::vector<Lit> lits;
  std::array<std::uint32_t, 2> watch{0, 1};
  Lit blocker;
  bool learned = false;

  std::size_t size() const { return lits.size(); }
  bool watched() const { return lits.size() >= 2; }
  Lit watched_lit(int slot) const { return lits[watch[slot]]; }
  /// Slot (0 or 1) whose watched literal is `lit`, or -1.
  int slot_of(Lit lit) const {
    if (lits[watch[0]] == lit) return 0;
    if (lits[watch[1]] == lit) return 1;
    return -1;
  }
  bool contains(Lit lit) const;
};

enum class AddStatus { stored, unit, tautology, empty };

struct AddResult {
  AddStatus status;
  ClauseRef ref;  // valid for stored and unit
};

/// Normalizes a literal list with set semantics: duplicates are merged in
/// first-occurrence order. Returns false if the list holds a complementary
/// pair.
bool normalize_clause(std::vector<Lit>& lits);

/// Clause store for original and learned clauses. References stay valid when
/// clauses are appended.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  bool trivially_unsat() const { return trivially_unsat_; }

  const Clause& operator[](ClauseRef ref) const { return clauses_[ref.index()]; }
  Clause& operator[](ClauseRef ref) { return clauses_[ref.index()]; }

  const std::vector<Clause>& clauses() const { return clauses_; }
  /// Size-1 clauses, in insertion order.
  const std::vector<ClauseRef>& units() const { return units_; }

  /// Stores the normalized clause. Watches start on the first two literals.
  AddResult add_clause(std::vector<Lit> lits, bool learned = false);
  AddResult add_clause(std::initializer_list<int> dimacs, bool learned = false);

  /// Clauses that are not learned, in insertion order, as literal lists.
  std::vector<std::vector<Lit>> original_clauses() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::size_t num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<ClauseRef> units_;
  bool trivially_unsat_ = false;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { malformed_header, literal_out_of_range, missing_terminator, bad_token };

  ParseError(Kind kind, std::size_t line, const std::string& detail);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs_string(const std::string& text);
Formula read_dimacs_file(const std::string& path);

/// Writes the original (non-learned) clauses in normalized form.
void write_dimacs(std::ostream& out, const Formula& formula);

}  // namespace lscb
