#pragma once

#include "toricnc/ncpart.hpp"

// Slow reference implementations used only by tests. Both routes work on the
// circle of 2d points (elements interleaved with midpoints) and never touch
// the closed-form index arithmetic of the library.
namespace toricnc::oracle {

// Mark the positions enclosed by the family's arcs, take the complement, and
// read the midpoint runs back off as intervals.
IntervalFamily beta_by_marked_points(const IntervalFamily& s);

// Weight exponent recounted from the marked positions: one per nonsingleton
// block, one per marked singleton, one per marked midpoint after an
// antisingleton.
int weight_exponent_by_marked_points(const NcPartition& p, const IntervalFamily& s);

}  // namespace toricnc::oracle
