#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mms.hpp"

namespace fairdiv {

// Proportional division of the continuous line [0, m] (piecewise-constant
// densities): cuts.size() == owners.size() + 1, cuts.front() == 0,
// cuts.back() == m, strictly increasing; owners[t] holds piece
// [cuts[t], cuts[t+1]] and values it at least 1/n.
struct CutPointList {
  std::vector<Rational> cuts;
  std::vector<int> owners;
};

// Single-item matching at max{MMS_i, 1/(4n)}, then a moving-knife completion;
// output is MMS-fair with utilitarian welfare >= 1/4.
Allocation goods_util_mms(const Instance& inst);

// One probe of the egalitarian target o: cardinality matching for agents whose
// MMS alone cannot reach o/(2n), then a moving knife at max{MMS_i, o/(2n)}.
// nullopt when the knife starves an agent (o too ambitious).
std::optional<Allocation> goods_egal_mms_at(const Instance& inst, const Rational& o,
                                            const MmsProfile* profile = nullptr);

struct EgalResult {
  Allocation alloc;
  Rational o_star;  // largest candidate target that succeeded; >= OPT_E
};

// Exact candidate descent over {0} union all per-agent interval sums; the
// result is MMS-fair with egalitarian welfare >= o_star / (2n).
EgalResult goods_egal_mms(const Instance& inst);

// Continuous proportional moving knife over the active agents (each must
// value every single item below 1/n); threshold 1/n with n the full agent
// count. Last active agent takes the remainder.
CutPointList cake_proportional(const Instance& inst, const std::vector<int>& active);

// PROP1 allocation with utilitarian welfare >= 1/2: big-item agents are
// satisfied by an adjacent item, the rest share via cake_proportional, and the
// straddled items round left or right, whichever rounding earns more.
Allocation goods_prop1(const Instance& inst);

struct Prop1Detail {
  Allocation chosen;
  bool cake_branch = false;
  // Populated only when the cake branch ran.
  std::optional<Allocation> left_rounding;
  std::optional<Allocation> right_rounding;
  Rational uw_left;
  Rational uw_right;
};
Prop1Detail goods_prop1_detail(const Instance& inst);

}  // namespace fairdiv
