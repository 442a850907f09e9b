#pragma once

#include "fairdiv/instance.hpp"

namespace fairdiv {

// True iff the items in `range` split into k connected bundles, each with
// value >= q for the agent (empty bundles allowed).
// Goods: q <= 0 is trivially feasible; otherwise repeatedly cut the smallest
// prefix with value >= q and count the bundles formed (surplus merges into the
// last bundle, which only raises its value).
// Chores: repeatedly remove the largest prefix with value >= q, k-1 times
// (possibly empty), then test the remainder.
bool feasible(const Instance& inst, int agent, const Rational& q, int k, Block range);

// Exact maximin share of `range` split into k connected bundles: binary search
// for the largest feasible q over the candidate set {0} + all contiguous
// interval sums inside the range (the min bundle of any connected partition is
// such a sum, or 0 when empty).
Rational mms_value_on(const Instance& inst, int agent, int k, Block range);

// Exact MMS_i for the whole line with n bundles.
Rational mms_value(const Instance& inst, int agent);

// A defining partition: n connected bundles, each with agent value >= the MMS
// value; produced by the greedy of feasible() at q = MMS_i.
Allocation mms_partition(const Instance& inst, int agent);

// Values and defining partitions for every agent.
MmsProfile mms_profile(const Instance& inst);

}  // namespace fairdiv
