#include "fairdiv/chores.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

namespace {

void require_chores(const Instance& inst) {
  if (inst.kind != Kind::Chores) throw ValidationError("chores instance required");
}

struct SweepParams {
  ChoresFairness mode;
  const std::vector<Rational>* mms;  // full-instance MMS values (Mms mode only)
  int orig_n;                        // thresholds always use the full agent count
};

// Engine shared by both sweeps and by the egalitarian repair (which re-runs it
// on a freed sub-block keeping the original thresholds). Writes bundles only
// for `agents_in`, appending them to `order` as they are served.
void run_sweep(const Instance& inst, const std::vector<int>& agents_in, Block pool,
               const SweepParams& par, std::vector<Block>& bundles, std::vector<int>& order) {
  std::vector<int> remaining(agents_in);
  std::sort(remaining.begin(), remaining.end());
  const Rational share(-1, par.orig_n);
  const Rational two_share(-2, par.orig_n);
  auto threshold = [&](int i) -> Rational {
    if (par.mode == ChoresFairness::Mms) return std::max((*par.mms)[i], two_share);
    return share;
  };
  int lo = pool.lo;
  const int hi = pool.hi;
  while ((int)remaining.size() > 1 && lo < hi) {
    bool gate = false;
    for (int i : remaining)
      if (inst.item_value(i, lo) >= threshold(i)) {
        gate = true;
        break;
      }
    int winner = -1;
    Block award{lo, lo + 1};
    if (gate) {
      // the longest pool prefix on which someone still meets her threshold
      int best_p = lo;
      for (int p = lo; p < hi; ++p) {
        Block pref{lo, p + 1};
        for (int i : remaining)
          if (value(inst, i, pref) >= threshold(i)) {
            best_p = p;
            break;
          }
      }
      Block pref{lo, best_p + 1};
      if (par.mode == ChoresFairness::Mms) {
        Rational best_v;
        for (int i : remaining) {
          Rational v = value(inst, i, pref);
          if (v >= threshold(i) && (winner == -1 || v > best_v)) {
            winner = i;
            best_v = std::move(v);
          }
        }
        award = pref;
      } else {
        // qualified agents compete by their value on the one-longer prefix;
        // the winner takes it only while it stays above -2/n
        Block ext{lo, std::min(best_p + 2, hi)};
        Rational best_v;
        for (int i : remaining) {
          if (value(inst, i, pref) < share) continue;
          Rational v = value(inst, i, ext);
          if (winner == -1 || v > best_v) {
            winner = i;
            best_v = std::move(v);
          }
        }
        award = value(inst, winner, ext) >= two_share ? ext : pref;
      }
    } else {
      // the first item is too heavy for everyone: it goes alone to whoever
      // suffers least
      Rational best_v;
      for (int i : remaining) {
        Rational v = inst.item_value(i, lo);
        if (winner == -1 || v > best_v) {
          winner = i;
          best_v = std::move(v);
        }
      }
    }
    bundles[winner] = award;
    order.push_back(winner);
    remaining.erase(std::find(remaining.begin(), remaining.end(), winner));
    lo = award.hi;
  }
  if ((int)remaining.size() == 1 && lo < hi) {
    bundles[remaining.front()] = Block{lo, hi};
    order.push_back(remaining.front());
    remaining.clear();
  }
  for (int i : remaining) order.push_back(i);  // pool ran dry; they stay empty
}

SweepTrace run_full(const Instance& inst, ChoresFairness mode) {
  require_chores(inst);
  MmsProfile prof;
  if (mode == ChoresFairness::Mms) prof = mms_profile(inst);
  SweepTrace tr;
  tr.alloc.bundles.assign(inst.n, Block{inst.m + 1, inst.m + 1});
  std::vector<int> agents(inst.n);
  std::iota(agents.begin(), agents.end(), 0);
  SweepParams par{mode, mode == ChoresFairness::Mms ? &prof.mms : nullptr, inst.n};
  run_sweep(inst, agents, Block{1, inst.m + 1}, par, tr.alloc.bundles, tr.receive_order);
  return tr;
}

}  // namespace

SweepTrace chores_mms_trace(const Instance& inst) { return run_full(inst, ChoresFairness::Mms); }

Allocation chores_mms(const Instance& inst) { return chores_mms_trace(inst).alloc; }

SweepTrace chores_prop1_trace(const Instance& inst) {
  return run_full(inst, ChoresFairness::Prop1);
}

Allocation chores_prop1(const Instance& inst) { return chores_prop1_trace(inst).alloc; }

Allocation chores_egal_repair(const Instance& inst, ChoresFairness fairness,
                              const Allocation& alloc) {
  require_chores(inst);
  if (inst.n < 4) throw ValidationError("egalitarian repair supports n >= 4 only");
  require_valid(inst, alloc);
  const Rational floor_half(-1, 2);
  if (egalitarian_welfare(inst, alloc) >= floor_half) return alloc;

  int k = -1;
  Rational worst;
  for (int i = 0; i < inst.n; ++i) {
    Rational v = value(inst, i, alloc.bundles[i]);
    if (k == -1 || v < worst) {
      k = i;
      worst = std::move(v);
    }
  }
  const Block burden = alloc.bundles[k];
  // earliest-served predecessor (bundles are handed out left to right) who
  // can absorb the burden without dropping below -1/2
  int donor = -1;
  for (int i = 0; i < inst.n; ++i) {
    if (i == k || alloc.bundles[i].empty()) continue;
    if (alloc.bundles[i].lo >= burden.lo) continue;
    if (value(inst, i, burden) < floor_half) continue;
    if (donor == -1 || alloc.bundles[i].lo < alloc.bundles[donor].lo) donor = i;
  }
  if (donor == -1) return alloc;

  Allocation out(alloc);
  Block freed = out.bundles[donor];
  out.bundles[donor] = burden;
  std::vector<int> crew;
  for (int i = 0; i < inst.n; ++i)
    if (alloc.bundles[i].empty()) crew.push_back(i);
  crew.push_back(k);
  for (int i : crew) out.bundles[i] = Block{inst.m + 1, inst.m + 1};
  MmsProfile prof;
  if (fairness == ChoresFairness::Mms) prof = mms_profile(inst);
  SweepParams par{fairness, fairness == ChoresFairness::Mms ? &prof.mms : nullptr, inst.n};
  std::vector<int> order;
  run_sweep(inst, crew, freed, par, out.bundles, order);
  return out;
}

}  // namespace fairdiv
