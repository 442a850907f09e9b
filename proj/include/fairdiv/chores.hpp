#pragma once

#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mms.hpp"

namespace fairdiv {

enum class ChoresFairness { Mms, Prop1 };

struct SweepTrace {
  Allocation alloc;
  // Agents in the order they were served: prefix awards first, then the
  // remainder taker / empty-handed agents (ascending).
  std::vector<int> receive_order;
};

// Left-to-right prefix sweep awarding, to some remaining agent, the largest
// pool prefix still worth max{MMS_i, -2/n} to her; when even the first item is
// too heavy for everyone, it goes alone to whoever suffers least. The last
// agent takes the remainder. Output is MMS-fair with UW >= -3.
SweepTrace chores_mms_trace(const Instance& inst);
Allocation chores_mms(const Instance& inst);

// Same sweep shape with qualification threshold -1/n; the winning prefix is
// extended by one item when the winner still values the extension >= -2/n.
// Output is PROP1 with UW > -3 and the final recipient's value >= -1/n.
SweepTrace chores_prop1_trace(const Instance& inst);
Allocation chores_prop1(const Instance& inst);

// Egalitarian repair for n >= 4: when some agent sits below -1/2, her bundle
// moves to the earliest-served predecessor who accepts it at >= -1/2, and the
// freed block is re-swept (same fairness, original thresholds) over the
// still-empty agents plus her. Returns the input unchanged when EW >= -1/2
// already holds or no predecessor accepts.
Allocation chores_egal_repair(const Instance& inst, ChoresFairness fairness,
                              const Allocation& alloc);

}  // namespace fairdiv
