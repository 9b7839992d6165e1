#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lscb/analyze.hpp"
#include "lscb/testkit/fixtures.hpp"
#include "lscb/testkit/generate.hpp"
#include "lscb/testkit/oracle.hpp"

using namespace lscb;
using testkit::dimacs;

namespace {

Lit L(int v) { return Lit::from_dimacs(v); }

std::vector<Lit> lits(std::initializer_list<int> ints) {
  std::vector<Lit> out;
  for (int v : ints) out.push_back(L(v));
  return out;
}

std::set<int> as_set(std::span<const Lit> c) {
  const auto d = dimacs(c);
  return {d.begin(), d.end()};
}

testkit::Replay s2(AnalyzeStrategy strategy) {
  SolverConfig cfg;
  cfg.mode = BacktrackMode::lscb;
  cfg.analyze = strategy;
  return testkit::replay(testkit::fixture_s2(), cfg);
}

}  // namespace

TEST_CASE("level utilities on the S2 clause {v3, v6, -v4}") {
  const auto r = s2(AnalyzeStrategy::analyze2);
  const TrailState& t = r.solver->trail();
  const auto d = lits({3, 6, -4});
  CHECK(clause_level(d, t) == Level(2));
  CHECK(second_level(d, t) == Level(1));
  CHECK(count_at_level(d, Level(2), t) == 1);
  CHECK(count_at_level(d, Level(1), t) == 2);
  CHECK(residual_level(d, L(3), t) == Level(1));
  CHECK(clause_level({}, t) == Level(0));
  CHECK(second_level({}, t) == Level(0));
  CHECK(second_level(lits({3}), t) == Level(0));
}

TEST_CASE("level utilities match a full scan") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 15;
    TrailState t(n);
    for (Var v = 1; v <= n; ++v) {
      if (rng() % 3 == 0 || t.decision_level() == Level(0)) {
        t.enqueue_decision(Lit::make(v, rng() % 2));
      } else {
        const auto lvl = rng() % (t.decision_level().value() + 1);
        t.enqueue_implied(Lit::make(v, rng() % 2), ClauseRef(0),
                          Level(static_cast<std::uint32_t>(lvl)));
      }
    }
    std::vector<Lit> c;
    for (Var v = 1; v <= n; ++v) {
      if (rng() % 3 == 0) c.push_back(Lit::make(v, rng() % 2));
    }
    std::vector<std::uint32_t> levels;
    for (Lit l : c) levels.push_back(t.level(l).value());
    std::sort(levels.rbegin(), levels.rend());
    const std::uint32_t top = levels.empty() ? 0 : levels[0];
    std::uint32_t second = 0;
    for (auto lv : levels) {
      if (lv < top) {
        second = lv;
        break;
      }
    }
    CHECK(clause_level(c, t) == Level(top));
    CHECK(second_level(c, t) == Level(second));
    CHECK(count_at_level(c, Level(top), t) ==
          static_cast<std::size_t>(std::count(levels.begin(), levels.end(), top)));
  }
}

TEST_CASE("resolve") {
  CHECK(dimacs(resolve(lits({5, -7, 6}), lits({7, 5, 3}), L(7))) == std::vector<int>{5, 6, 3});
  CHECK(dimacs(resolve(lits({1, -2}), lits({2, 1}), L(2))) == std::vector<int>{1});
  CHECK_THROWS_AS(resolve(lits({1, 2}), lits({2, 1}), L(2)), ContractViolation);
}

TEST_CASE("resolve agrees with a set-union oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 1000; ++round) {
    const int pivot = 1 + static_cast<int>(rng() % 10);
    std::set<int> a{-pivot}, b{pivot};
    for (int k = 0; k < 4; ++k) {
      const int v = 11 + static_cast<int>(rng() % 8);
      a.insert(rng() % 2 ? v : -v);
      const int w = 11 + static_cast<int>(rng() % 8);
      b.insert(rng() % 2 ? w : -w);
    }
    // Keep the inputs free of complementary pairs.
    bool clean = true;
    for (int x : a) clean = clean && (x == -pivot || !a.contains(-x));
    for (int x : b) clean = clean && (x == pivot || !b.contains(-x));
    if (!clean) continue;
    std::vector<Lit> la, lb;
    for (int x : a) la.push_back(L(x));
    for (int x : b) lb.push_back(L(x));
    std::set<int> oracle;
    for (int x : a) {
      if (x != -pivot) oracle.insert(x);
    }
    for (int x : b) {
      if (x != pivot) oracle.insert(x);
    }
    const auto out = resolve(la, lb, L(pivot));
    CHECK(as_set(out) == oracle);
    CHECK(out.size() == oracle.size());
  }
}

TEST_CASE("analyze2 on S2 learns {v2} through the lazy reason of -v3") {
  const auto fx = testkit::fixture_s2();
  const auto r = s2(AnalyzeStrategy::analyze2);
  const Solver& s = *r.solver;
  REQUIRE(r.conflict == fx.ref(5));
  const Analysis a = analyze(s.formula()[r.conflict].lits, AnalyzeStrategy::analyze2, s.trail(),
                             s.formula());
  CHECK(dimacs(a.learned.literals) == std::vector<int>{2});
  CHECK(a.learned.level == Level(1));
  CHECK(a.learned.asserting == L(2));

  const ClauseRef c7(static_cast<std::uint32_t>(fx.clauses.size()));
  const std::vector<ClauseRef> chain{fx.ref(4), fx.ref(2), fx.ref(6), fx.ref(3), c7};
  REQUIRE(a.steps.size() == chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CAPTURE(i);
    CHECK(a.steps[i].clause == chain[i]);
    CHECK(a.steps[i].lazy == (i == 2));
  }
  CHECK(dimacs(std::vector<Lit>{a.steps[0].pivot, a.steps[1].pivot, a.steps[2].pivot,
                                a.steps[3].pivot, a.steps[4].pivot}) ==
        std::vector<int>{7, -5, -3, -6, 4});
  // C7 belongs to the example's clause set; C1..C6 alone do not imply it.
  Formula with_c7 = fx.formula();
  with_c7.add_clause({4, 2});
  CHECK(testkit::entails(with_c7, a.learned.literals));
}

TEST_CASE("analyze1 on S2 stops at the first UIP") {
  const auto r = s2(AnalyzeStrategy::analyze1);
  const Solver& s = *r.solver;
  const Analysis a = analyze(s.formula()[r.conflict].lits, AnalyzeStrategy::analyze1, s.trail(),
                             s.formula());
  CHECK(dimacs(a.learned.literals) == std::vector<int>{3, 6, -4});
  CHECK(a.learned.level == Level(2));
  CHECK(a.learned.second_level == Level(1));
  CHECK(a.steps.size() == 2);
}

TEST_CASE("analyze1 re-conflict loop ends with the same clause as analyze2") {
  for (AnalyzeStrategy strategy : {AnalyzeStrategy::analyze1, AnalyzeStrategy::analyze2}) {
    auto r = s2(strategy);
    Solver& s = *r.solver;
    const ConflictOutcome out = s.handle_conflict(r.conflict);
    CHECK_FALSE(out.unsat);
    CHECK(dimacs(out.final_clause.literals) == std::vector<int>{2});
    CHECK(out.analyses == (strategy == AnalyzeStrategy::analyze1 ? 2u : 1u));
    CHECK(s.stats().conflicts == out.analyses);
    // {v2} is asserted at the root.
    CHECK(s.trail().decision_level() == Level(0));
    CHECK(dimacs(s.trail().trail()) == std::vector<int>{2});
    CHECK(s.trail().level(L(2)) == Level(0));
  }
}

TEST_CASE("a clause with one top-level literal and no lazy reason is already learned") {
  Formula f(3);
  f.add_clause({-1, 2});
  TrailState t(3);
  t.enqueue_decision(L(1));
  t.enqueue_decision(L(3));
  const Analysis a = analyze(lits({-1, -3}), AnalyzeStrategy::analyze2, t, f);
  CHECK(a.steps.empty());
  CHECK(dimacs(a.learned.literals) == std::vector<int>{-3, -1});
  CHECK(a.learned.level == Level(2));
}

TEST_CASE("every pivot is the last trail literal at the clause level") {
  for (AnalyzeStrategy strategy : {AnalyzeStrategy::analyze1, AnalyzeStrategy::analyze2}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SolverConfig cfg;
      cfg.analyze = strategy;
      cfg.cb_threshold = 1;
      Solver s(testkit::random_3sat(40, 170, seed), cfg);
      std::uint64_t bad = 0;
      s.set_conflict_observer([&](const Solver& solver, ClauseRef conflict) {
        const TrailState& t = solver.trail();
        std::vector<Lit> d = solver.formula()[conflict].lits;
        const Analysis a = analyze(d, strategy, t, solver.formula());
        for (const ResolutionStep& step : a.steps) {
          const Level top = clause_level(d, t);
          Lit last;
          std::size_t best = 0;
          for (Lit q : d) {
            if (t.level(q) != top) continue;
            const std::size_t p = *t.position(~q);
            if (!last.defined() || p > best) {
              last = ~q;
              best = p;
            }
          }
          if (step.pivot != last) ++bad;
          d = resolve(d, solver.formula()[step.clause].lits, step.pivot);
          for (Lit q : d) {
            if (!t.is_false(q)) ++bad;
          }
        }
        if (as_set(d) != as_set(a.learned.literals)) ++bad;
      });
      s.solve();
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("minimize drops a literal implied by the rest") {
  // a@1 implies b@1 by {b, -a}; c is decided at level 2.
  Formula f(3);
  const ClauseRef rb = f.add_clause({2, -1}).ref;
  TrailState t(3);
  t.enqueue_decision(L(1));
  t.enqueue_implied(L(2), rb, Level(1));
  t.enqueue_decision(L(3));
  const LearnedClause d = make_learned(lits({-3, -1, -2}), t);
  const LearnedClause m = minimize(d, t, f);
  CHECK(dimacs(m.literals) == std::vector<int>{-3, -1});
  CHECK(m.asserting == L(-3));
  CHECK(m.level == Level(2));
  CHECK(m.second_level == Level(1));
}

TEST_CASE("minimize is a fixpoint when nothing can go") {
  Formula f(3);
  TrailState t(3);
  t.enqueue_decision(L(1));
  t.enqueue_decision(L(2));
  t.enqueue_decision(L(3));
  const LearnedClause d = make_learned(lits({-3, -1, -2}), t);
  const LearnedClause m = minimize(d, t, f);
  CHECK(m.literals == d.literals);
  CHECK(minimize(m, t, f).literals == m.literals);
}

TEST_CASE("make_learned puts the asserting literal first") {
  TrailState t(4);
  t.enqueue_decision(L(1));
  t.enqueue_decision(L(2));
  t.enqueue_decision(L(3));
  const LearnedClause d = make_learned(lits({-1, -2, -3}), t);
  CHECK(d.asserting == L(-3));
  CHECK(d.literals[0] == L(-3));
  CHECK(d.literals[1] == L(-2));
  CHECK(d.level == Level(3));
  CHECK(d.second_level == Level(2));
  t.enqueue_implied(L(4), ClauseRef(0), Level(3));
  CHECK_THROWS_AS(make_learned(lits({-3, -4}), t), ContractViolation);
}

TEST_CASE("minimized clauses stay falsified and entailed") {
  std::size_t seen = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Formula f = testkit::random_3sat(18, 77, seed);
    SolverConfig cfg;
    cfg.minimize = true;
    cfg.cb_threshold = 1;
    Solver s(f, cfg);
    s.set_learned_observer([&](const Solver& solver, const LearnedClause& before,
                               const LearnedClause& after) {
      ++seen;
      CHECK(after.literals.size() <= before.literals.size());
      CHECK(after.asserting == before.asserting);
      for (Lit l : after.literals) CHECK(solver.trail().is_false(l));
      CHECK(testkit::entails(f, after.literals));
    });
    s.solve();
  }
  CHECK(seen > 50);
}
