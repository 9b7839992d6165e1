#include "lscb/testkit/fixtures.hpp"

namespace lscb::testkit {

using Kind = FixtureStep::Kind;

ClauseRef Fixture::ref(int label) const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].label == label) return ClauseRef(static_cast<std::uint32_t>(i));
  }
  return ClauseRef::none();
}

namespace {

std::vector<Lit> to_lits(const std::vector<int>& ints) {
  std::vector<Lit> out;
  for (int v : ints) out.push_back(Lit::from_dimacs(v));
  return out;
}

}  // namespace

Formula Fixture::formula() const {
  Formula f(num_vars);
  for (const auto& c : clauses) f.add_clause(to_lits(c.lits));
  return f;
}

std::vector<int> dimacs(std::span<const Lit> lits) {
  std::vector<int> out;
  for (Lit l : lits) out.push_back(l.to_dimacs());
  return out;
}

Fixture fixture_s1() {
  Fixture f;
  f.name = "s1";
  f.num_vars = 6;
  // C6 goes before C5 so it is met first in the watch list of -5.
  f.clauses = {
      {1, {-3, 4}, {}},
      {2, {-3, -4, -1}, {}},
      {3, {5, 3}, {}},
      {4, {2, 3, -5}, {}},
      {6, {-6, -2, -5}, std::array<std::uint32_t, 2>{0, 2}},
      {5, {6, -5, 3}, {}},
  };
  f.script = {
      {Kind::decide, 1},     {Kind::propagate},
      {Kind::decide, 2},     {Kind::propagate},
      {Kind::decide, 3},     {Kind::propagate, 0, {}, true},
      {Kind::handle_conflict}, {Kind::propagate, 0, {}, true},
  };
  return f;
}

Fixture fixture_s2() {
  Fixture f;
  f.name = "s2";
  f.num_vars = 7;
  f.clauses = {
      {1, {-2, 1}, {}},
      {2, {-5, 3, -4}, std::array<std::uint32_t, 2>{0, 2}},
      {3, {-6, 2, -4}, std::array<std::uint32_t, 2>{0, 2}},
      {4, {7, 5, 3}, {}},
      {5, {5, -7, 6}, {}},
      {6, {-3, -4, 2}, {}},
  };
  f.script = {
      {Kind::decide, -1},          {Kind::propagate},
      {Kind::decide, -3},          {Kind::propagate},
      {Kind::learn, 0, {4, 2}},    {Kind::propagate, 0, {}, true},
  };
  return f;
}

Replay replay(const Fixture& fixture, const SolverConfig& config, TraceSink* sink) {
  Replay out;
  out.solver = std::make_unique<Solver>(Formula(fixture.num_vars), config);
  Solver& s = *out.solver;
  for (const auto& c : fixture.clauses) s.add_clause(to_lits(c.lits), c.watch);
  s.set_trace(sink);
  LSCB_EXPECT(s.init(), "fixture formula is unsatisfiable at the root");

  for (const FixtureStep& step : fixture.script) {
    switch (step.kind) {
      case Kind::decide:
        s.decide(Lit::from_dimacs(step.lit));
        break;
      case Kind::propagate: {
        const PropagationOutcome o = s.propagate();
        LSCB_EXPECT(o.conflict() == step.expect_conflict,
                    "fixture propagation " + std::string(o.conflict() ? "conflicted" : "did not conflict"));
        out.conflict = o.conflict_clause;
        break;
      }
      case Kind::handle_conflict:
        LSCB_EXPECT(out.conflict.valid(), "no conflict to handle");
        s.handle_conflict(out.conflict);
        out.conflict = ClauseRef::none();
        break;
      case Kind::learn:
        s.install_learned(make_learned(to_lits(step.clause), s.trail()), ClauseRef::none());
        break;
    }
  }
  return out;
}

}  // namespace lscb::testkit
