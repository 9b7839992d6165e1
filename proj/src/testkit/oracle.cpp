#include "lscb/testkit/oracle.hpp"

#include <cstdint>

namespace lscb::testkit {

namespace {

// Kept apart from the solver on purpose: clauses are plain DIMACS integers.
using IntClause = std::vector<int>;

std::vector<IntClause> to_ints(const Formula& f) {
  std::vector<IntClause> out;
  for (const Clause& c : f.clauses()) {
    IntClause ic;
    for (Lit l : c.lits) ic.push_back(l.to_dimacs());
    out.push_back(std::move(ic));
  }
  return out;
}

// value[v]: 0 unassigned, 1 true, -1 false
int lit_value(const std::vector<int>& value, int lit) {
  const int v = value[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
  return lit < 0 ? -v : v;
}

class Dpll {
 public:
  Dpll(std::size_t n, std::vector<IntClause> clauses) : value_(n + 1, 0), clauses_(std::move(clauses)) {}

  bool solve() { return search(); }
  std::vector<bool> model() const {
    std::vector<bool> m(value_.size(), false);
    for (std::size_t v = 1; v < value_.size(); ++v) m[v] = value_[v] > 0;
    return m;
  }

 private:
  // Returns false on a falsified clause. Assigned variables are appended to `set`.
  bool unit_propagate(std::vector<int>& set) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const IntClause& c : clauses_) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          const int val = lit_value(value_, lit);
          if (val > 0) {
            sat = true;
            break;
          }
          if (val == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          const int v = last < 0 ? -last : last;
          value_[static_cast<std::size_t>(v)] = last < 0 ? -1 : 1;
          set.push_back(v);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> set;
    if (!unit_propagate(set)) {
      undo(set);
      return false;
    }
    int branch = 0;
    for (const IntClause& c : clauses_) {
      bool sat = false;
      int free = 0;
      for (int lit : c) {
        const int val = lit_value(value_, lit);
        if (val > 0) sat = true;
        if (val == 0 && free == 0) free = lit;
      }
      if (!sat && free != 0) {
        branch = free;
        break;
      }
    }
    if (branch == 0) return true;
    const auto v = static_cast<std::size_t>(branch < 0 ? -branch : branch);
    for (int sign : {branch < 0 ? -1 : 1, branch < 0 ? 1 : -1}) {
      value_[v] = sign;
      if (search()) return true;
      value_[v] = 0;
    }
    undo(set);
    return false;
  }

  void undo(const std::vector<int>& set) {
    for (int v : set) value_[static_cast<std::size_t>(v)] = 0;
  }

  std::vector<int> value_;
  std::vector<IntClause> clauses_;
};

}  // namespace

std::optional<std::vector<bool>> truth_table(const Formula& formula) {
  const std::size_t n = formula.num_vars();
  if (n > kTruthTableLimit) throw OracleLimit("truth table limited to 26 variables");
  if (formula.trivially_unsat()) return std::nullopt;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;  // (positive, negative)
  for (const IntClause& c : to_ints(formula)) {
    std::uint32_t pos = 0, neg = 0;
    for (int lit : c) {
      const std::uint32_t bit = 1u << ((lit < 0 ? -lit : lit) - 1);
      (lit < 0 ? neg : pos) |= bit;
    }
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto bits = static_cast<std::uint32_t>(a);
    bool ok = true;
    for (const auto& [pos, neg] : masks) {
      if (((bits & pos) | (~bits & neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> model(n + 1, false);
    for (std::size_t v = 1; v <= n; ++v) model[v] = (bits >> (v - 1)) & 1u;
    return model;
  }
  return std::nullopt;
}

std::optional<std::vector<bool>> dpll(const Formula& formula) {
  if (formula.num_vars() > kDpllLimit) throw OracleLimit("DPLL oracle limited to 60 variables");
  if (formula.trivially_unsat()) return std::nullopt;
  Dpll solver(formula.num_vars(), to_ints(formula));
  if (!solver.solve()) return std::nullopt;
  return solver.model();
}

bool brute_force(const Formula& formula) {
  if (formula.num_vars() <= 12) return truth_table(formula).has_value();
  return dpll(formula).has_value();
}

bool entails(const Formula& formula, std::span<const Lit> clause) {
  Formula negated(formula.num_vars());
  for (const auto& c : formula.original_clauses()) negated.add_clause(c);
  if (formula.trivially_unsat()) return true;
  for (Lit l : clause) negated.add_clause({~l});
  return !brute_force(negated);
}

bool evaluate(const Formula& formula, const std::vector<bool>& model) {
  if (formula.trivially_unsat()) return false;
  for (const Clause& c : formula.clauses()) {
    bool sat = false;
    for (Lit l : c.lits) {
      if (l.var() < model.size() && model[l.var()] == !l.is_negative()) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace lscb::testkit
