#pragma once

#include "lscb/formula.hpp"
#include "lscb/stats.hpp"
#include "lscb/trail.hpp"

namespace lscb {

/// Unassigns every literal above `level` and repairs the propagation queue the
/// way `mode` prescribes:
///   ncb  - suffix removal;
///   wcb  - kept literals stay where they were (tau or omega), nothing repaired;
///   rscb - the head moves back to where the decision opening level+1 stood,
///          so every kept literal after it is propagated again;
///   lscb - removed literals whose lazy reason sits at or below `level` are
///          implied again by that reason, lowest residual level first.
void backtrack(TrailState& trail, const Formula& formula, BacktrackMode mode, Level level,
               Stats& stats);

}  // namespace lscb
