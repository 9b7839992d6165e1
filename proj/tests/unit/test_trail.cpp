#include <doctest.h>

#include "lscb/testkit/fixtures.hpp"
#include "lscb/trail.hpp"

using namespace lscb;

namespace {

Lit L(int v) { return Lit::from_dimacs(v); }

}  // namespace

TEST_CASE("fresh state") {
  TrailState t(4);
  CHECK(t.value(L(1)) == LitValue::unassigned);
  CHECK(t.level(L(1)).is_infinite());
  CHECK_FALSE(t.lazy(L(1)).valid());
  CHECK(t.lazy_level(L(1)).is_infinite());
  CHECK(t.head() == 0);
  CHECK(t.decision_level() == Level(0));
  CHECK_FALSE(t.position(L(1)));
}

TEST_CASE("decisions count levels") {
  TrailState t(4);
  t.enqueue_decision(L(1));
  CHECK(t.level(L(1)) == Level(1));
  CHECK(t.position(L(1)) == 0u);
  CHECK(t.value(L(-1)) == LitValue::falsified);
  CHECK(t.level(L(-1)) == Level(1));
  t.enqueue_implied(L(3), ClauseRef(0), Level(1));
  t.enqueue_decision(L(2));
  CHECK(t.level(L(2)) == Level(2));
  CHECK(t.decisions().size() == 2);
  CHECK(t.decision_level() == Level(2));
  CHECK(t.is_decision(L(2)));
  CHECK_FALSE(t.is_decision(L(3)));
  CHECK(t.reason(L(3)) == ClauseRef(0));
}

TEST_CASE("root implication sits at level 0") {
  TrailState t(2);
  t.enqueue_implied(L(1), ClauseRef(0), Level(0));
  CHECK(t.level(L(1)) == Level(0));
}

TEST_CASE("assigning twice is a contract violation") {
  TrailState t(2);
  t.enqueue_decision(L(1));
  CHECK_THROWS_AS(t.enqueue_decision(L(-1)), ContractViolation);
  CHECK_THROWS_AS(t.enqueue_implied(L(1), ClauseRef(0), Level(1)), ContractViolation);
}

TEST_CASE("pop_next moves omega into tau in order") {
  TrailState t(3);
  t.enqueue_decision(L(1));
  t.enqueue_implied(L(2), ClauseRef(0), Level(1));
  CHECK(t.in_tau(L(1)) == false);
  CHECK(t.pop_next() == L(1));
  CHECK(t.in_tau(L(1)));
  CHECK_FALSE(t.in_tau(L(2)));
  CHECK(t.pop_next() == L(2));
  CHECK(t.queue_empty());
  CHECK_THROWS_AS(t.pop_next(), ContractViolation);
}

TEST_CASE("set_lazy keeps the lowest residual level") {
  TrailState t(4);
  t.enqueue_decision(L(1));
  t.enqueue_decision(L(2));
  t.enqueue_decision(L(3));
  t.set_lazy(L(3), ClauseRef(5), Level(2));
  CHECK(t.lazy(L(3)) == ClauseRef(5));
  CHECK(t.lazy_level(L(3)) == Level(2));
  t.set_lazy(L(3), ClauseRef(6), Level(1));
  CHECK(t.lazy(L(3)) == ClauseRef(6));
  CHECK(t.lazy_level(L(3)) == Level(1));
  CHECK(t.lazy(L(-3)) == ClauseRef::none());
  CHECK_THROWS_AS(t.set_lazy(L(3), ClauseRef(7), Level(3)), ContractViolation);
}

TEST_CASE("remove_above keeps relative order and counts kept tau literals") {
  TrailState t(6);
  t.enqueue_decision(L(1));
  t.enqueue_decision(L(2));
  t.enqueue_implied(L(3), ClauseRef(0), Level(1));
  t.enqueue_implied(L(4), ClauseRef(1), Level(2));
  t.enqueue_implied(L(5), ClauseRef(2), Level(1));
  t.pop_next();
  t.pop_next();
  t.pop_next();
  std::vector<Lit> removed;
  const std::size_t kept_tau = t.remove_above(Level(1), [&](Lit l) { removed.push_back(l); });
  CHECK(removed == std::vector<Lit>{L(2), L(4)});
  CHECK(kept_tau == 2);
  REQUIRE(t.size() == 3);
  CHECK(t.trail()[0] == L(1));
  CHECK(t.trail()[1] == L(3));
  CHECK(t.trail()[2] == L(5));
  CHECK(t.position(L(5)) == 2u);
  CHECK(t.value(L(2)) == LitValue::unassigned);
  CHECK(t.decision_level() == Level(1));
}

TEST_CASE("S1 trail before the first conflict is handled") {
  auto fx = testkit::fixture_s1();
  fx.script.resize(6);
  SolverConfig cfg;
  cfg.mode = BacktrackMode::lscb;
  const auto r = testkit::replay(fx, cfg);
  const TrailState& t = r.solver->trail();
  CHECK(testkit::dimacs(t.trail()) == std::vector<int>{1, 2, 3, 4});
  CHECK(t.value(L(3)) == LitValue::satisfied);
  CHECK(t.level(L(4)) == Level(3));
  CHECK(t.reason(L(4)) == fx.ref(1));
  CHECK(t.head() == 2);
}

TEST_CASE("S1 trail at the level-2 conflict") {
  const auto fx = testkit::fixture_s1();
  SolverConfig cfg;
  cfg.mode = BacktrackMode::lscb;
  cfg.cb_threshold = 1;
  const auto r = testkit::replay(fx, cfg);
  const TrailState& t = r.solver->trail();
  CHECK(testkit::dimacs(t.trail()) == std::vector<int>{1, 2, -3, 5, -6});
  CHECK(t.value(L(-3)) == LitValue::satisfied);
  CHECK(t.value(L(3)) == LitValue::falsified);
  CHECK(t.level(L(-3)) == Level(1));
  CHECK(t.level(L(5)) == Level(1));
  CHECK(t.reason(L(5)) == fx.ref(3));
  CHECK(t.lazy(L(2)) == fx.ref(4));
  CHECK(t.lazy_level(L(2)) == Level(1));
  CHECK(t.level(L(-6)) == Level(2));
  CHECK(t.reason(L(-6)) == fx.ref(6));
}
