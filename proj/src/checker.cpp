#include "lscb/checker.hpp"

#include <sstream>

namespace lscb {

namespace {

std::string describe(const TrailState& t, Lit lit) {
  std::ostringstream os;
  os << lit << "@";
  if (t.is_true(lit) || t.is_false(lit)) {
    os << t.level(lit);
  } else {
    os << "?";
  }
  if (t.is_true(lit)) {
    os << (t.in_tau(lit) ? "+tau" : "+omega");
  } else if (t.is_false(lit)) {
    os << (t.in_tau(~lit) ? "-tau" : "-omega");
  }
  return os.str();
}

bool blocker_covers(const TrailState& t, const Clause& c, Lit c1) {
  return c.blocker.defined() && t.is_true(c.blocker) && t.level(c.blocker) <= t.level(c1);
}

bool lazy_covers(const TrailState& t, Lit c2, Lit c1) {
  return t.level(c2) <= t.level(c1) || t.lazy_level(c2) <= t.level(c1);
}

// Consequent of the watched-literal invariant `id` for orientation (c1, c2),
// assuming ~c1 is in tau.
bool watch_consequent(int id, const TrailState& t, const Clause& c, Lit c1, Lit c2,
                      bool blockers) {
  bool ok = false;
  switch (id) {
    case 1: ok = !t.in_tau(~c2); break;
    case 4: ok = t.is_true(c2); break;
    case 5: ok = t.is_true(c2) && t.level(c2) <= t.level(c1); break;
    case 7:
    case 8: ok = t.is_true(c2) && lazy_covers(t, c2, c1); break;
    default: break;
  }
  if (ok) return true;
  if (id == 8 || blockers) return blocker_covers(t, c, c1);
  return false;
}

void check_watches(int id, const TrailState& t, const Formula& f, bool blockers,
                   ClauseRef conflict, std::vector<Violation>& out) {
  if (id == 8 && !blockers) return;
  for (std::uint32_t i = 0; i < f.num_clauses(); ++i) {
    const Clause& c = f.clauses()[i];
    if (!c.watched() || ClauseRef(i) == conflict) continue;
    for (int slot = 0; slot < 2; ++slot) {
      const Lit c1 = c.watched_lit(slot);
      const Lit c2 = c.watched_lit(1 - slot);
      if (!t.in_tau(~c1)) continue;
      if (watch_consequent(id, t, c, c1, c2, blockers)) continue;
      std::ostringstream os;
      os << "C" << i + 1 << ": c1=" << describe(t, c1) << " c2=" << describe(t, c2);
      if (t.is_true(c2)) os << " lazy_level(c2)=" << t.lazy_level(c2);
      if (c.blocker.defined()) os << " b=" << describe(t, c.blocker);
      out.push_back({id, ClauseRef(i), Lit(), os.str()});
      break;
    }
  }
}

void check_implied(const TrailState& t, const Formula& f, std::vector<Violation>& out) {
  for (Lit lit : t.trail()) {
    if (t.is_decision(lit)) continue;
    const ClauseRef r = t.reason(lit);
    std::string problem;
    if (!r.valid()) {
      problem = "no reason";
    } else if (!f[r].contains(lit)) {
      problem = "reason does not contain the literal";
    } else {
      for (Lit q : f[r].lits) {
        if (q != lit && !t.is_false(q)) problem = "reason literal " + describe(t, q) + " not falsified";
      }
    }
    if (!problem.empty()) out.push_back({2, r, lit, describe(t, lit) + ": " + problem});
  }
}

void check_topological(const TrailState& t, const Formula& f, std::vector<Violation>& out) {
  for (Lit lit : t.trail()) {
    const ClauseRef r = t.reason(lit);
    if (!r.valid() || t.is_decision(lit)) continue;
    const std::size_t p = *t.position(lit);
    for (Lit q : f[r].lits) {
      if (q == lit) continue;
      const auto pq = t.position(~q);
      if (!pq || *pq > p) {
        out.push_back({3, r, lit,
                       describe(t, lit) + " at " + std::to_string(p) + " precedes " +
                           describe(t, ~q)});
        break;
      }
    }
  }
}

void check_lazy(const TrailState& t, const Formula& f, std::vector<Violation>& out) {
  for (Lit lit : t.trail()) {
    const ClauseRef l = t.lazy(lit);
    if (!l.valid()) {
      if (!t.lazy_level(lit).is_infinite()) {
        out.push_back({6, l, lit, describe(t, lit) + ": cached lazy level without a clause"});
      }
      continue;
    }
    const Clause& c = f[l];
    std::string problem;
    Level residual(0);
    if (!c.contains(lit)) {
      problem = "lazy reason does not contain the literal";
    } else {
      for (Lit q : c.lits) {
        if (q == lit) continue;
        if (!t.is_false(q)) problem = "lazy reason literal " + describe(t, q) + " not falsified";
        residual = std::max(residual, t.level(q));
      }
    }
    if (problem.empty() && !(residual < t.level(lit))) problem = "residual level not below";
    if (problem.empty() && residual != t.lazy_level(lit)) problem = "stale cached lazy level";
    if (!problem.empty()) out.push_back({6, l, lit, describe(t, lit) + ": " + problem});
  }
}

}  // namespace

std::vector<Violation> check(const TrailState& trail, const Formula& formula, int id,
                             bool blockers, ClauseRef conflict) {
  LSCB_EXPECT(id >= 1 && id <= kNumInvariants, "invariant id out of range");
  std::vector<Violation> out;
  switch (id) {
    case 2: check_implied(trail, formula, out); break;
    case 3: check_topological(trail, formula, out); break;
    case 6: check_lazy(trail, formula, out); break;
    default: check_watches(id, trail, formula, blockers, conflict, out); break;
  }
  return out;
}

std::uint64_t InvariantReport::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

void InvariantReport::merge(const InvariantReport& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  for (const auto& v : other.samples) {
    if (samples.size() >= 16) break;
    samples.push_back(v);
  }
}

InvariantReport check_all(const TrailState& trail, const Formula& formula, bool blockers,
                          ClauseRef conflict, unsigned mask) {
  InvariantReport report;
  for (int id = 1; id <= kNumInvariants; ++id) {
    if (!(mask & (1u << id))) continue;
    auto found = check(trail, formula, id, blockers, conflict);
    report.counts[id] += found.size();
    for (auto& v : found) {
      if (report.samples.size() >= 16) break;
      report.samples.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace lscb
