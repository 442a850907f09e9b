#pragma once

#include "fairdiv/instance.hpp"

namespace fairdiv {

// n = 2 only: scans all 2(m+1) cut-and-assign allocations and returns the
// egalitarian-optimal one, breaking ties toward giving the lower-valued agent
// more items (goods) or fewer (chores), then the lower cut, then agent 1 on
// the left. The result is simultaneously MMS-fair and PROP1, with EW = OPT_E
// and UW >= 1 (goods) / >= -1 (chores).
Allocation two_agent_best(const Instance& inst);

}  // namespace fairdiv
