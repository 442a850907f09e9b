#include "fairdiv/two_agent.hpp"

#include <algorithm>

namespace fairdiv {

Allocation two_agent_best(const Instance& inst) {
  if (inst.n != 2) throw ValidationError("two-agent construction requires exactly 2 agents");
  const int m = inst.m;
  const bool goods = inst.kind == Kind::Goods;

  Allocation best;
  Rational best_ew;
  int best_count = 0;
  bool have = false;
  for (int cut = 0; cut <= m; ++cut) {
    for (int left_owner = 0; left_owner < 2; ++left_owner) {
      Block left{1, cut + 1}, right{cut + 1, m + 1};
      if (left.empty()) left = Block{m + 1, m + 1};
      if (right.empty()) right = Block{m + 1, m + 1};
      Allocation cand;
      cand.bundles.assign(2, Block{m + 1, m + 1});
      cand.bundles[left_owner] = left;
      cand.bundles[1 - left_owner] = right;
      Rational v0 = value(inst, 0, cand.bundles[0]);
      Rational v1 = value(inst, 1, cand.bundles[1]);
      Rational ew = std::min(v0, v1);
      // items held by the smaller-valued agent (agent 1 when equal)
      int count = (int)(v0 <= v1 ? cand.bundles[0].size() : cand.bundles[1].size());
      bool better;
      if (!have)
        better = true;
      else if (ew != best_ew)
        better = ew > best_ew;
      else if (count != best_count)
        better = goods ? count > best_count : count < best_count;
      else
        better = false;  // scan order already prefers lower cuts, agent 1 left
      if (better) {
        best = std::move(cand);
        best_ew = std::move(ew);
        best_count = count;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace fairdiv
