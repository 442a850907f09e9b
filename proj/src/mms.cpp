#include "fairdiv/mms.hpp"

#include <algorithm>
#include <vector>

namespace fairdiv {

namespace {

// Largest prefix length (0..len) of range whose value is >= q; -1 if even the
// empty prefix fails (only possible when q > 0).
int largest_prefix_at_least(const Instance& inst, int agent, const Rational& q, Block range) {
  int best = q <= 0 ? 0 : -1;
  Rational sum = 0;
  for (int j = range.lo; j < range.hi; ++j) {
    sum += inst.item_value(agent, j);
    if (sum >= q) best = j - range.lo + 1;
  }
  return best;
}

}  // namespace

bool feasible(const Instance& inst, int agent, const Rational& q, int k, Block range) {
  if (k < 1) throw std::out_of_range("bundle count must be >= 1");
  if (range.empty()) return q <= 0;
  if (inst.kind == Kind::Goods) {
    if (q <= 0) return true;
    int bundles = 0;
    Rational sum = 0;
    for (int j = range.lo; j < range.hi; ++j) {
      sum += inst.item_value(agent, j);
      if (sum >= q) {
        ++bundles;
        if (bundles >= k) return true;
        sum = 0;
      }
    }
    return false;
  }
  // Chores.
  Block rest = range;
  for (int cut = 0; cut < k - 1; ++cut) {
    const int take = largest_prefix_at_least(inst, agent, q, rest);
    if (take < 0) return false;
    rest.lo += take;
  }
  return value(inst, agent, rest) >= q;
}

Rational mms_value_on(const Instance& inst, int agent, int k, Block range) {
  if (k < 1) throw std::out_of_range("bundle count must be >= 1");
  std::vector<Rational> candidates;
  candidates.push_back(Rational(0));
  for (int lo = range.lo; lo < range.hi; ++lo) {
    Rational sum = 0;
    for (int hi = lo; hi < range.hi; ++hi) {
      sum += inst.item_value(agent, hi);
      candidates.push_back(sum);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // feasible is monotone: smaller q is easier. Find the largest feasible candidate.
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1, best = -1;
  while (lo <= hi) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(inst, agent, candidates[mid], k, range)) {
      best = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (best < 0) throw GuaranteeError("no feasible maximin candidate; unreachable");
  return candidates[best];
}

Rational mms_value(const Instance& inst, int agent) {
  return mms_value_on(inst, agent, inst.n, Block{1, inst.m + 1});
}

Allocation mms_partition(const Instance& inst, int agent) {
  const Rational q = mms_value(inst, agent);
  const int k = inst.n;
  Allocation out;
  out.bundles.assign(k, Block{inst.m + 1, inst.m + 1});
  Block rest{1, inst.m + 1};
  if (inst.kind == Kind::Goods) {
    for (int b = 0; b < k - 1 && !rest.empty(); ++b) {
      // Smallest non-empty prefix with value >= q (q <= 0 yields singletons).
      Rational sum = 0;
      int take = 0;
      for (int j = rest.lo; j < rest.hi; ++j) {
        sum += inst.item_value(agent, j);
        if (sum >= q) {
          take = j - rest.lo + 1;
          break;
        }
      }
      if (take == 0) break;  // rest of the line merges into the final bundle
      out.bundles[b] = Block{rest.lo, rest.lo + take};
      rest.lo += take;
    }
  } else {
    for (int b = 0; b < k - 1; ++b) {
      const int take = largest_prefix_at_least(inst, agent, q, rest);
      if (take < 0) throw GuaranteeError("defining partition cut failed; unreachable");
      out.bundles[b] = Block{rest.lo, rest.lo + take};
      rest.lo += take;
    }
  }
  out.bundles[k - 1] = rest;
  for (int b = 0; b < k; ++b) {
    if (out.bundles[b].empty()) out.bundles[b] = Block{rest.hi, rest.hi};
    if (value(inst, agent, out.bundles[b]) < q) {
      throw GuaranteeError("defining partition bundle below the maximin value; unreachable");
    }
  }
  return out;
}

MmsProfile mms_profile(const Instance& inst) {
  MmsProfile profile;
  profile.mms.reserve(inst.n);
  profile.partition.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    profile.mms.push_back(mms_value(inst, i));
    profile.partition.push_back(mms_partition(inst, i));
  }
  return profile;
}

}  // namespace fairdiv
