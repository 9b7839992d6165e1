#include <doctest.h>

#include <optional>
#include <sstream>

#include "lscb/formula.hpp"
#include "lscb/testkit/generate.hpp"

using namespace lscb;

namespace {

std::vector<int> ints(const Clause& c) {
  std::vector<int> out;
  for (Lit l : c.lits) out.push_back(l.to_dimacs());
  return out;
}

}  // namespace

TEST_CASE("literal encoding") {
  const Lit a = Lit::from_dimacs(-7);
  CHECK(a.var() == 7);
  CHECK(a.is_negative());
  CHECK(~~a == a);
  CHECK((~a).var() == a.var());
  CHECK((~a).is_negative() != a.is_negative());
  CHECK(a.code() == 2 * 7 + 1);
  CHECK(a.to_dimacs() == -7);
  CHECK_FALSE(Lit::undef().defined());
}

TEST_CASE("level sentinel compares above every finite level") {
  CHECK(Level(0) < Level::infinity());
  CHECK(Level(4000000000u) < Level::infinity());
  CHECK(Level::infinity().is_infinite());
  CHECK_FALSE(Level(3).is_infinite());
}

TEST_CASE("parse_dimacs") {
  SUBCASE("two clauses") {
    const Formula f = parse_dimacs_string("p cnf 3 2\n1 -2 0\n-1 3 0\n");
    CHECK(f.num_vars() == 3);
    REQUIRE(f.num_clauses() == 2);
    CHECK(ints(f.clauses()[0]) == std::vector<int>{1, -2});
    CHECK(ints(f.clauses()[1]) == std::vector<int>{-1, 3});
    CHECK(f.units().empty());
  }
  SUBCASE("comment and unit") {
    const Formula f = parse_dimacs_string("c comment\np cnf 1 1\n1 0\n");
    CHECK(f.num_vars() == 1);
    REQUIRE(f.units().size() == 1);
    CHECK(ints(f[f.units()[0]]) == std::vector<int>{1});
    CHECK_FALSE(f[f.units()[0]].watched());
  }
  SUBCASE("empty clause") {
    CHECK(parse_dimacs_string("p cnf 1 1\n0\n").trivially_unsat());
  }
  SUBCASE("clause spanning lines and SATLIB trailer") {
    const Formula f = parse_dimacs_string("p cnf 3 1\n1 2\n 3 0\n%\n0\n");
    REQUIRE(f.num_clauses() == 1);
    CHECK(ints(f.clauses()[0]) == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("parse errors carry kind and line") {
  using Kind = ParseError::Kind;
  const auto kind_of = [](const std::string& text) {
    try {
      parse_dimacs_string(text);
    } catch (const ParseError& e) {
      return std::optional<Kind>(e.kind());
    }
    return std::optional<Kind>();
  };
  CHECK(kind_of("p cnf x 1\n1 0\n") == Kind::malformed_header);
  CHECK(kind_of("1 0\n") == Kind::malformed_header);
  CHECK(kind_of("") == Kind::malformed_header);
  CHECK(kind_of("p cnf 2 1\n3 0\n") == Kind::literal_out_of_range);
  CHECK(kind_of("p cnf 2 1\n1 2\n") == Kind::missing_terminator);
  CHECK(kind_of("p cnf 2 1\n1 a 0\n") == Kind::bad_token);
  try {
    parse_dimacs_string("p cnf 2 2\n1 0\n\n-4 0\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("add_clause") {
  Formula f(6);
  SUBCASE("watches start on the first two literals") {
    const AddResult r = f.add_clause({2, 3, -5});
    CHECK(r.status == AddStatus::stored);
    CHECK(f[r.ref].watched_lit(0) == Lit::from_dimacs(2));
    CHECK(f[r.ref].watched_lit(1) == Lit::from_dimacs(3));
  }
  SUBCASE("tautology is skipped") {
    CHECK(f.add_clause({1, -1}).status == AddStatus::tautology);
    CHECK(f.num_clauses() == 0);
  }
  SUBCASE("duplicates collapse to a unit") {
    const AddResult r = f.add_clause({1, 1});
    CHECK(r.status == AddStatus::unit);
    CHECK(ints(f[r.ref]) == std::vector<int>{1});
    CHECK(f.units() == std::vector<ClauseRef>{r.ref});
  }
  SUBCASE("empty clause") {
    CHECK(f.add_clause(std::vector<Lit>{}).status == AddStatus::empty);
    CHECK(f.trivially_unsat());
  }
  SUBCASE("references survive learned insertions") {
    const ClauseRef first = f.add_clause({1, 2}).ref;
    for (int i = 0; i < 1000; ++i) f.add_clause({-1, 3, 4}, true);
    CHECK(ints(f[first]) == std::vector<int>{1, 2});
    CHECK(f.original_clauses().size() == 1);
  }
  SUBCASE("variable out of range") {
    CHECK_THROWS_AS(f.add_clause({7}), ContractViolation);
  }
}

TEST_CASE("write then parse is the identity on normalized formulas") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Formula f = testkit::random_3sat(15, 60, seed);
    f.add_clause({4, 4, -9});
    f.add_clause({2});
    std::ostringstream out;
    write_dimacs(out, f);
    const Formula back = parse_dimacs_string(out.str());
    CHECK(back == f);
    for (const Clause& c : back.clauses()) {
      if (c.watched()) CHECK(c.watch[0] != c.watch[1]);
    }
  }
}
