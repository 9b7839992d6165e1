#include "lscb/formula.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace lscb {

std::string_view to_string(BacktrackMode mode) {
  switch (mode) {
    case BacktrackMode::ncb: return "ncb";
    case BacktrackMode::wcb: return "wcb";
    case BacktrackMode::rscb: return "rscb";
    case BacktrackMode::lscb: return "lscb";
  }
  return "?";
}

BacktrackMode parse_mode(std::string_view text) {
  if (text == "ncb") return BacktrackMode::ncb;
  if (text == "wcb") return BacktrackMode::wcb;
  if (text == "rscb") return BacktrackMode::rscb;
  if (text == "lscb") return BacktrackMode::lscb;
  throw std::invalid_argument("unknown backtracking mode '" + std::string(text) + "'");
}

bool Clause::contains(Lit lit) const {
  return std::find(lits.begin(), lits.end(), lit) != lits.end();
}

bool normalize_clause(std::vector<Lit>& lits) {
  std::unordered_set<Lit> seen;
  std::vector<Lit> out;
  out.reserve(lits.size());
  for (Lit lit : lits) {
    if (seen.contains(~lit)) return false;
    if (seen.insert(lit).second) out.push_back(lit);
  }
  lits = std::move(out);
  return true;
}

AddResult Formula::add_clause(std::vector<Lit> lits, bool learned) {
  for (Lit lit : lits) {
    LSCB_EXPECT(lit.defined() && lit.var() <= num_vars_,
                "literal variable exceeds the formula's variable count");
  }
  if (!normalize_clause(lits)) return {AddStatus::tautology, ClauseRef::none()};
  if (lits.empty()) {
    trivially_unsat_ = true;
    return {AddStatus::empty, ClauseRef::none()};
  }
  const ClauseRef ref(static_cast<std::uint32_t>(clauses_.size()));
  Clause clause;
  clause.lits = std::move(lits);
  clause.learned = learned;
  if (clause.watched()) clause.blocker = clause.lits[1];
  const bool unit = !clause.watched();
  clauses_.push_back(std::move(clause));
  if (unit) {
    units_.push_back(ref);
    return {AddStatus::unit, ref};
  }
  return {AddStatus::stored, ref};
}

AddResult Formula::add_clause(std::initializer_list<int> dimacs, bool learned) {
  std::vector<Lit> lits;
  for (int v : dimacs) lits.push_back(Lit::from_dimacs(v));
  return add_clause(std::move(lits), learned);
}

std::vector<std::vector<Lit>> Formula::original_clauses() const {
  std::vector<std::vector<Lit>> out;
  for (const Clause& c : clauses_) {
    if (!c.learned) out.push_back(c.lits);
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.num_vars_ == b.num_vars_ && a.trivially_unsat_ == b.trivially_unsat_ &&
         a.original_clauses() == b.original_clauses();
}

namespace {

std::string kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::malformed_header: return "malformed header";
    case ParseError::Kind::literal_out_of_range: return "literal out of range";
    case ParseError::Kind::missing_terminator: return "missing terminating 0";
    case ParseError::Kind::bad_token: return "non-integer token";
  }
  return "parse error";
}

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size()) return false;
  for (std::size_t k = i; k < token.size(); ++k) {
    if (token[k] < '0' || token[k] > '9') return false;
  }
  if (token.size() - i > 10) return false;
  out = std::stoll(token);
  return true;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_name(kind) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

Formula parse_dimacs(std::istream& in) {
  using Kind = ParseError::Kind;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long num_vars = 0;
  Formula formula;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const char lead = line[first];
    if (lead == 'c') continue;
    // SATLIB files close the clause section with a '%' line.
    if (lead == '%') break;
    std::istringstream tokens(line);
    if (lead == 'p') {
      std::string p, cnf, vars_tok, clauses_tok, extra;
      tokens >> p >> cnf >> vars_tok >> clauses_tok;
      long long vars = 0, clauses = 0;
      if (have_header || p != "p" || cnf != "cnf" || !parse_int(vars_tok, vars) ||
          !parse_int(clauses_tok, clauses) || vars < 0 || clauses < 0 || (tokens >> extra)) {
        throw ParseError(Kind::malformed_header, line_no, line);
      }
      have_header = true;
      num_vars = vars;
      formula = Formula(static_cast<std::size_t>(vars));
      continue;
    }
    if (!have_header) throw ParseError(Kind::malformed_header, line_no, "clause before header");
    std::string token;
    while (tokens >> token) {
      long long value = 0;
      if (!parse_int(token, value)) throw ParseError(Kind::bad_token, line_no, token);
      if (value == 0) {
        formula.add_clause(std::move(pending));
        pending.clear();
        continue;
      }
      if (value > num_vars || -value > num_vars) {
        throw ParseError(Kind::literal_out_of_range, line_no, token);
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
    }
  }
  if (!have_header) throw ParseError(Kind::malformed_header, line_no, "missing 'p cnf' line");
  if (!pending.empty()) throw ParseError(Kind::missing_terminator, pending_line, "");
  return formula;
}

Formula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Formula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Formula& formula) {
  const auto clauses = formula.original_clauses();
  const std::size_t count = clauses.size() + (formula.trivially_unsat() ? 1 : 0);
  out << "p cnf " << formula.num_vars() << ' ' << count << '\n';
  for (const auto& clause : clauses) {
    for (Lit lit : clause) out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
  if (formula.trivially_unsat()) out << "0\n";
}

}  // namespace lscb
