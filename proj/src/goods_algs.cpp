#include "fairdiv/goods.hpp"

#include <algorithm>

#include "fairdiv/subroutines.hpp"

namespace fairdiv {

namespace {

void require_goods(const Instance& inst) {
  if (inst.kind != Kind::Goods) throw ValidationError("goods instance required");
}

Rational partial_uw(const Instance& inst, const PartialAllocation& partial) {
  Rational uw(0);
  for (int i = 0; i < inst.n; ++i) uw += value(inst, i, partial.bundles[i]);
  return uw;
}

}  // namespace

Allocation goods_util_mms(const Instance& inst) {
  require_goods(inst);
  const int n = inst.n;
  MmsProfile prof = mms_profile(inst);
  const Rational quarter_share(1, 4 * n);
  ThresholdVector alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = std::max(prof.mms[i], quarter_share);
  PartialAllocation matched = matching_weighted(inst, alpha);
  std::optional<Allocation> result;
  if (partial_uw(inst, matched) >= Rational(1, 4)) {
    ThresholdVector beta(n);
    for (int i = 0; i < n; ++i) beta[i] = prof.mms[i];
    result = moving_knife(inst, matched, beta);
  } else {
    PartialAllocation empty;
    empty.bundles.assign(n, Block{inst.m + 1, inst.m + 1});
    result = moving_knife(inst, empty, alpha);
  }
  if (!result) throw GuaranteeError("moving knife starved an agent despite the welfare guarantee");
  return *result;
}

std::optional<Allocation> goods_egal_mms_at(const Instance& inst, const Rational& o,
                                            const MmsProfile* profile) {
  require_goods(inst);
  if (o < 0) throw ValidationError("egalitarian target must be non-negative");
  const int n = inst.n;
  MmsProfile local;
  if (profile == nullptr) {
    local = mms_profile(inst);
    profile = &local;
  }
  const Rational item_share = o / (2 * n);
  ThresholdVector alpha(n);
  for (int i = 0; i < n; ++i) {
    if (profile->mms[i] >= item_share)
      alpha[i] = std::nullopt;  // her MMS already covers the target
    else
      alpha[i] = item_share;
  }
  PartialAllocation matched = matching_cardinality(inst, alpha);
  ThresholdVector beta(n);
  for (int i = 0; i < n; ++i) beta[i] = std::max(profile->mms[i], item_share);
  return moving_knife(inst, matched, beta);
}

EgalResult goods_egal_mms(const Instance& inst) {
  require_goods(inst);
  MmsProfile prof = mms_profile(inst);
  const int n = inst.n, m = inst.m;
  std::vector<Rational> cands;
  cands.emplace_back(0);
  for (int a = 0; a < n; ++a)
    for (int lo = 1; lo <= m; ++lo)
      for (int hi = lo + 1; hi <= m + 1; ++hi) cands.push_back(value(inst, a, Block{lo, hi}));
  std::sort(cands.begin(), cands.end(), std::greater<Rational>());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Rational& o : cands) {
    auto attempt = goods_egal_mms_at(inst, o, &prof);
    if (attempt) return EgalResult{std::move(*attempt), o};
  }
  throw GuaranteeError("candidate descent failed even at target 0");
}

CutPointList cake_proportional(const Instance& inst, const std::vector<int>& active) {
  require_goods(inst);
  const int n = inst.n, m = inst.m;
  const Rational share(1, n);
  if (active.empty()) throw ValidationError("cake division needs at least one active agent");
  for (int a : active) {
    if (a < 0 || a >= n) throw ValidationError("active agent out of range");
    for (int j = 1; j <= m; ++j)
      if (inst.item_value(a, j) >= share)
        throw ValidationError("active agents must value every single item below 1/n");
  }

  auto item_after = [](const Rational& x) {
    // first item whose interval extends beyond position x (x >= 0)
    return (boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x))
               .convert_to<int>() + 1;
  };
  // Smallest x >= from with value of [from, x] exactly `share` for agent a.
  auto cut_for = [&](int a, const Rational& from) -> std::optional<Rational> {
    Rational acc(0);
    for (int j = item_after(from); j <= m; ++j) {
      Rational a0 = std::max(from, Rational(j - 1));
      Rational d = inst.item_value(a, j);
      Rational gain = (Rational(j) - a0) * d;
      if (acc + gain >= share) {
        if (d == 0) return a0;  // already at target when the flat stretch starts
        return a0 + (share - acc) / d;
      }
      acc += gain;
    }
    return std::nullopt;
  };

  CutPointList out;
  out.cuts.emplace_back(0);
  std::vector<int> remaining(active);
  std::sort(remaining.begin(), remaining.end());
  Rational prev(0);
  while (remaining.size() > 1) {
    int winner = -1;
    Rational best_cut;
    for (int a : remaining) {
      auto x = cut_for(a, prev);
      if (!x) continue;
      if (winner == -1 || *x < best_cut) {
        winner = a;
        best_cut = *x;
      }
    }
    if (winner == -1)
      throw GuaranteeError("no remaining agent can cut a proportional piece");
    out.cuts.push_back(best_cut);
    out.owners.push_back(winner);
    remaining.erase(std::find(remaining.begin(), remaining.end(), winner));
    prev = best_cut;
  }
  // Remainder to the last agent; her value on it must still reach the share.
  int last = remaining.front();
  Rational rest(0);
  for (int j = item_after(prev); j <= m; ++j) {
    Rational a0 = std::max(prev, Rational(j - 1));
    rest += (Rational(j) - a0) * inst.item_value(last, j);
  }
  if (rest < share) throw GuaranteeError("remainder piece falls below the proportional share");
  out.cuts.emplace_back(m);
  out.owners.push_back(last);
  return out;
}

namespace {

// Rounding of a continuous division to whole items. Left rounding hands the
// item straddling a cut to the piece on the cut's left; right rounding to the
// piece on its right.
Allocation round_cake(const Instance& inst, const CutPointList& cake, bool left) {
  const int n = inst.n, m = inst.m;
  const int k = (int)cake.owners.size();
  // Piece for item j: the first piece whose right boundary lies beyond the
  // item's left end (left rounding) resp. at/after its right end (right
  // rounding). A cut strictly inside an item thus sends it left or right.
  std::vector<int> piece_of(m + 1, 0);
  int t = 0;
  for (int j = 1; j <= m; ++j) {
    while (t < k - 1 && (left ? cake.cuts[t + 1] <= Rational(j - 1)
                              : cake.cuts[t + 1] < Rational(j)))
      ++t;
    piece_of[j] = t;
  }
  Allocation out;
  out.bundles.assign(n, Block{m + 1, m + 1});
  for (int j = 1; j <= m;) {
    int q = j;
    while (q < m && piece_of[q + 1] == piece_of[j]) ++q;
    out.bundles[cake.owners[piece_of[j]]] = Block{j, q + 1};
    j = q + 1;
  }
  return out;
}

}  // namespace

Prop1Detail goods_prop1_detail(const Instance& inst) {
  require_goods(inst);
  const int n = inst.n, m = inst.m;
  const Rational share(1, n);
  std::vector<int> big, small;
  for (int i = 0; i < n; ++i) {
    bool has_big = false;
    for (int j = 1; j <= m && !has_big; ++j)
      if (inst.item_value(i, j) >= share) has_big = true;
    (has_big ? big : small).push_back(i);
  }
  Prop1Detail detail;
  if ((int)small.size() <= 1) {
    // Everyone (or everyone but one) is satisfied by a single adjacent item;
    // the whole line goes to the lone small-item agent, or to agent 1.
    int recipient = small.empty() ? 0 : small.front();
    detail.chosen.bundles.assign(n, Block{m + 1, m + 1});
    detail.chosen.bundles[recipient] = Block{1, m + 1};
    return detail;
  }
  detail.cake_branch = true;
  CutPointList cake = cake_proportional(inst, small);
  Allocation left = round_cake(inst, cake, true);
  Allocation right = round_cake(inst, cake, false);
  detail.uw_left = utilitarian_welfare(inst, left);
  detail.uw_right = utilitarian_welfare(inst, right);
  detail.chosen = detail.uw_left >= detail.uw_right ? left : right;
  detail.left_rounding = std::move(left);
  detail.right_rounding = std::move(right);
  return detail;
}

Allocation goods_prop1(const Instance& inst) { return goods_prop1_detail(inst).chosen; }

}  // namespace fairdiv
