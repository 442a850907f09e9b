#pragma once

#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class WelfareKind { Utilitarian, Egalitarian };
enum class FairnessFilter { None, Mms, Prop1 };

const char* welfare_name(WelfareKind w);     // "uw" / "ew"
const char* fairness_name(FairnessFilter f); // "none" / "mms" / "prop1"

// Desk-scale guards; exceeding one raises SizeGuardError naming the limit.
struct OracleLimits {
  int enum_n = 3;
  int enum_m = 12;
  int dp_n = 12;
  int dp_m = 40;
  int mms_m = 20;
};

struct WelfareResult {
  Rational value;
  Allocation witness;
};

// goods: ratio = opt / best_fair (Infinite when best_fair = 0 and opt > 0);
// chores: ratio = best_fair / opt (Infinite when opt = 0 and best_fair < 0);
// 1 when both optima coincide at 0.
struct PofReport {
  Kind kind;
  WelfareKind welfare;
  FairnessFilter filter;
  Rational opt_welfare;
  Rational best_fair_welfare;
  ExtendedRational ratio;
  Allocation opt_witness;
  Allocation fair_witness;
};

// Every complete allocation: 1 <= b <= min(n, m) non-empty contiguous blocks
// times every injective owner assignment; agents without a block are empty.
// Count = sum_b C(m-1, b-1) * n! / (n-b)!.
std::vector<Allocation> enumerate_allocations(const Instance& inst, const OracleLimits& lim = {});

// Exact optimal welfare over all complete allocations (bitmask DP over used
// agents; egalitarian via binary search on the candidate value set {0} union
// all per-agent interval sums).
WelfareResult opt_welfare(const Instance& inst, WelfareKind welfare, const OracleLimits& lim = {});

// Same DPs restricted to allocations passing the fairness filter. The MMS
// profile is computed on demand when not supplied.
WelfareResult best_fair_welfare(const Instance& inst, WelfareKind welfare, FairnessFilter filter,
                                const OracleLimits& lim = {}, const MmsProfile* profile = nullptr);

// Exhaustive max-min over connected n-partitions (empty bundles allowed).
Rational mms_bruteforce(const Instance& inst, int agent, const OracleLimits& lim = {});

PofReport pof_ratio(const Instance& inst, WelfareKind welfare, FairnessFilter filter,
                    const OracleLimits& lim = {});

// True when the items outside `removed_items` can be split into contiguous
// blocks (contiguous in the original line) assigned injectively to the agents
// outside `removed_agents`, empties allowed, giving every such agent i a
// bundle worth at least targets[i]. Agents are 0-based, items 1-based.
bool completion_exists(const Instance& inst, const std::vector<int>& removed_agents,
                       const std::vector<int>& removed_items, const std::vector<Rational>& targets);

}  // namespace fairdiv
