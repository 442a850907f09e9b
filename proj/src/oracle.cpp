#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

namespace fairdiv {

const char* welfare_name(WelfareKind w) {
  return w == WelfareKind::Utilitarian ? "uw" : "ew";
}

const char* fairness_name(FairnessFilter f) {
  switch (f) {
    case FairnessFilter::None: return "none";
    case FairnessFilter::Mms: return "mms";
    default: return "prop1";
  }
}

namespace {

// Prefix sums so block values are two lookups.
struct Tables {
  const Instance& inst;
  std::vector<std::vector<Rational>> pre;
  explicit Tables(const Instance& in) : inst(in) {
    pre.assign(in.n, std::vector<Rational>(in.m + 1, Rational(0)));
    for (int a = 0; a < in.n; ++a)
      for (int p = 1; p <= in.m; ++p) pre[a][p] = pre[a][p - 1] + in.item_value(a, p);
  }
  Rational val(int a, const Block& b) const { return pre[a][b.hi - 1] - pre[a][b.lo - 1]; }
};

// Self-contained restatement of the PROP1 test so the oracle double-checks the
// core checker instead of calling it: the bundle alone reaches the
// proportional share, or one adjacent item (goods) / one endpoint removal
// (chores) gets it there.
bool prop1_block_ok(const Tables& T, int a, const Block& b) {
  const Instance& inst = T.inst;
  const int n = inst.n, m = inst.m;
  if (inst.kind == Kind::Goods) {
    Rational need(1, n);
    if (b.empty()) {
      for (int e = 1; e <= m; ++e)
        if (inst.item_value(a, e) >= need) return true;
      return false;
    }
    Rational v = T.val(a, b);
    if (v >= need) return true;
    if (b.lo > 1 && v + inst.item_value(a, b.lo - 1) >= need) return true;
    if (b.hi <= m && v + inst.item_value(a, b.hi) >= need) return true;
    return false;
  }
  Rational need(-1, n);
  if (b.empty()) return true;
  Rational v = T.val(a, b);
  if (v >= need) return true;
  if (v - inst.item_value(a, b.lo) >= need) return true;
  if (v - inst.item_value(a, b.hi - 1) >= need) return true;
  return false;
}

bool admissible(const Tables& T, FairnessFilter f, const MmsProfile* prof, int a, const Block& b) {
  switch (f) {
    case FairnessFilter::None: return true;
    case FairnessFilter::Mms: return T.val(a, b) >= prof->mms[a];
    default: return prop1_block_ok(T, a, b);
  }
}

WelfareResult solve_uw(const Instance& inst, const Tables& T, FairnessFilter f,
                       const MmsProfile* prof) {
  const int n = inst.n, m = inst.m;
  const int full = 1 << n;
  const Block none{m + 1, m + 1};
  std::vector<std::vector<std::optional<Rational>>> dp(
      m + 2, std::vector<std::optional<Rational>>(full));
  std::vector<std::vector<std::pair<int, int>>> choice(
      m + 2, std::vector<std::pair<int, int>>(full, {-1, -1}));
  for (int mask = 0; mask < full; ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (!((mask >> a) & 1) && !admissible(T, f, prof, a, none)) ok = false;
    if (ok) dp[m + 1][mask] = Rational(0);
  }
  for (int pos = m; pos >= 1; --pos)
    for (int mask = 0; mask < full; ++mask) {
      std::optional<Rational> best;
      std::pair<int, int> bc{-1, -1};
      for (int end = pos; end <= m; ++end) {
        Block blk{pos, end + 1};
        for (int a = 0; a < n; ++a) {
          if ((mask >> a) & 1) continue;
          const auto& rest = dp[end + 1][mask | (1 << a)];
          if (!rest) continue;
          if (!admissible(T, f, prof, a, blk)) continue;
          Rational cand = T.val(a, blk) + *rest;
          if (!best || cand > *best) {
            best = std::move(cand);
            bc = {end, a};
          }
        }
      }
      dp[pos][mask] = std::move(best);
      choice[pos][mask] = bc;
    }
  if (!dp[1][0]) throw GuaranteeError("no admissible allocation under the fairness filter");
  Allocation alloc;
  alloc.bundles.assign(n, none);
  int pos = 1, mask = 0;
  while (pos <= m) {
    auto [end, a] = choice[pos][mask];
    alloc.bundles[a] = Block{pos, end + 1};
    mask |= 1 << a;
    pos = end + 1;
  }
  return {*dp[1][0], std::move(alloc)};
}

// Threshold-feasibility DP: can the whole line be split so every agent's
// bundle (empty ones included) is worth >= t and passes the filter?
std::optional<Allocation> feasible_at(const Instance& inst, const Tables& T, FairnessFilter f,
                                      const MmsProfile* prof, const Rational& t) {
  const int n = inst.n, m = inst.m;
  const int full = 1 << n;
  const Block none{m + 1, m + 1};
  std::vector<std::vector<char>> dp(m + 2, std::vector<char>(full, 0));
  for (int mask = 0; mask < full; ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (!((mask >> a) & 1))
        ok = t <= 0 && admissible(T, f, prof, a, none);
    dp[m + 1][mask] = ok;
  }
  auto step_ok = [&](int pos, int mask, int end, int a) {
    if ((mask >> a) & 1) return false;
    Block blk{pos, end + 1};
    if (!dp[end + 1][mask | (1 << a)]) return false;
    if (T.val(a, blk) < t) return false;
    return admissible(T, f, prof, a, blk);
  };
  for (int pos = m; pos >= 1; --pos)
    for (int mask = 0; mask < full; ++mask) {
      char ok = 0;
      for (int end = pos; end <= m && !ok; ++end)
        for (int a = 0; a < n && !ok; ++a)
          if (step_ok(pos, mask, end, a)) ok = 1;
      dp[pos][mask] = ok;
    }
  if (!dp[1][0]) return std::nullopt;
  Allocation alloc;
  alloc.bundles.assign(n, none);
  int pos = 1, mask = 0;
  while (pos <= m) {
    bool advanced = false;
    for (int end = pos; end <= m && !advanced; ++end)
      for (int a = 0; a < n && !advanced; ++a)
        if (step_ok(pos, mask, end, a)) {
          alloc.bundles[a] = Block{pos, end + 1};
          mask |= 1 << a;
          pos = end + 1;
          advanced = true;
        }
    if (!advanced) throw GuaranteeError("welfare witness reconstruction failed");
  }
  return alloc;
}

WelfareResult solve_ew(const Instance& inst, const Tables& T, FairnessFilter f,
                       const MmsProfile* prof) {
  const int n = inst.n, m = inst.m;
  // Candidate values: 0 plus every per-agent interval sum. The realized
  // minimum is always one of these, so the largest feasible candidate is the
  // exact optimum.
  std::vector<Rational> cands;
  cands.emplace_back(0);
  for (int a = 0; a < n; ++a)
    for (int lo = 1; lo <= m; ++lo)
      for (int hi = lo + 1; hi <= m + 1; ++hi) cands.push_back(T.val(a, Block{lo, hi}));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  int L = 0, R = (int)cands.size() - 1, ans = -1;
  while (L <= R) {
    int mid = (L + R) / 2;
    if (feasible_at(inst, T, f, prof, cands[mid])) {
      ans = mid;
      L = mid + 1;
    } else {
      R = mid - 1;
    }
  }
  if (ans < 0) throw GuaranteeError("no admissible allocation under the fairness filter");
  auto witness = feasible_at(inst, T, f, prof, cands[ans]);
  return {cands[ans], std::move(*witness)};
}

void check_dp_guard(const Instance& inst, const OracleLimits& lim) {
  if (inst.n > lim.dp_n || inst.m > lim.dp_m)
    throw SizeGuardError("instance exceeds welfare DP guard (n <= " + std::to_string(lim.dp_n) +
                         ", m <= " + std::to_string(lim.dp_m) + ")");
}

}  // namespace

std::vector<Allocation> enumerate_allocations(const Instance& inst, const OracleLimits& lim) {
  if (inst.n > lim.enum_n || inst.m > lim.enum_m)
    throw SizeGuardError("instance exceeds enumeration guard (n <= " + std::to_string(lim.enum_n) +
                         ", m <= " + std::to_string(lim.enum_m) + ")");
  const int n = inst.n, m = inst.m;
  std::vector<Allocation> out;
  std::vector<int> cut_gaps;  // a cut after item g splits g | g+1
  std::vector<int> owners;
  std::vector<bool> used(n, false);

  auto emit = [&]() {
    const int b = (int)owners.size();
    Allocation alloc;
    alloc.bundles.assign(n, Block{m + 1, m + 1});
    int lo = 1;
    for (int i = 0; i < b; ++i) {
      int hi = (i < b - 1) ? cut_gaps[i] + 1 : m + 1;
      alloc.bundles[owners[i]] = Block{lo, hi};
      lo = hi;
    }
    out.push_back(std::move(alloc));
  };
  std::function<void(int, int)> pick_owner = [&](int idx, int b) {
    if (idx == b) {
      emit();
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (used[a]) continue;
      used[a] = true;
      owners.push_back(a);
      pick_owner(idx + 1, b);
      owners.pop_back();
      used[a] = false;
    }
  };
  std::function<void(int, int, int)> pick_cuts = [&](int idx, int start, int b) {
    if (idx == b - 1) {
      pick_owner(0, b);
      return;
    }
    for (int g = start; g <= m - 1 - (b - 2 - idx); ++g) {
      cut_gaps.push_back(g);
      pick_cuts(idx + 1, g + 1, b);
      cut_gaps.pop_back();
    }
  };
  for (int b = 1; b <= std::min(n, m); ++b) pick_cuts(0, 1, b);
  return out;
}

WelfareResult opt_welfare(const Instance& inst, WelfareKind welfare, const OracleLimits& lim) {
  check_dp_guard(inst, lim);
  Tables T(inst);
  if (welfare == WelfareKind::Utilitarian) return solve_uw(inst, T, FairnessFilter::None, nullptr);
  return solve_ew(inst, T, FairnessFilter::None, nullptr);
}

WelfareResult best_fair_welfare(const Instance& inst, WelfareKind welfare, FairnessFilter filter,
                                const OracleLimits& lim, const MmsProfile* profile) {
  check_dp_guard(inst, lim);
  Tables T(inst);
  MmsProfile local;
  if (filter == FairnessFilter::Mms && profile == nullptr) {
    local = mms_profile(inst);
    profile = &local;
  }
  if (welfare == WelfareKind::Utilitarian) return solve_uw(inst, T, filter, profile);
  return solve_ew(inst, T, filter, profile);
}

Rational mms_bruteforce(const Instance& inst, int agent, const OracleLimits& lim) {
  if (inst.m > lim.mms_m)
    throw SizeGuardError("instance exceeds brute-force MMS guard (m <= " +
                         std::to_string(lim.mms_m) + ")");
  const int n = inst.n, m = inst.m;
  Tables T(inst);
  std::optional<Rational> best;
  const std::uint32_t gmask_end = m >= 1 ? (1u << (m - 1)) : 1u;
  for (std::uint32_t gm = 0; gm < gmask_end; ++gm) {
    int b = __builtin_popcount(gm) + 1;
    if (b > n) continue;
    std::optional<Rational> mn;
    int lo = 1;
    for (int g = 1; g <= m; ++g) {
      bool cut = (g == m) || ((gm >> (g - 1)) & 1);
      if (!cut) continue;
      Rational v = T.val(agent, Block{lo, g + 1});
      if (!mn || v < *mn) mn = std::move(v);
      lo = g + 1;
    }
    if (b < n && *mn > 0) mn = Rational(0);  // the empty bundles drag the min down
    if (!best || *mn > *best) best = std::move(*mn);
  }
  return *best;
}

PofReport pof_ratio(const Instance& inst, WelfareKind welfare, FairnessFilter filter,
                    const OracleLimits& lim) {
  WelfareResult opt = opt_welfare(inst, welfare, lim);
  WelfareResult fair = best_fair_welfare(inst, welfare, filter, lim);
  ExtendedRational ratio;
  if (inst.kind == Kind::Goods) {
    if (fair.value == 0)
      ratio = opt.value == 0 ? ExtendedRational::make(Rational(1)) : ExtendedRational::infinite();
    else
      ratio = ExtendedRational::make(opt.value / fair.value);
  } else {
    if (opt.value == 0)
      ratio = fair.value == 0 ? ExtendedRational::make(Rational(1)) : ExtendedRational::infinite();
    else
      ratio = ExtendedRational::make(fair.value / opt.value);
  }
  return PofReport{inst.kind,  welfare,    filter,
                   opt.value,  fair.value, ratio,
                   std::move(opt.witness), std::move(fair.witness)};
}

bool completion_exists(const Instance& inst, const std::vector<int>& removed_agents,
                       const std::vector<int>& removed_items,
                       const std::vector<Rational>& targets) {
  const int n = inst.n, m = inst.m;
  if ((int)targets.size() != n) throw ValidationError("targets size mismatch");
  std::vector<bool> agent_gone(n, false);
  std::vector<bool> item_gone(m + 1, false);
  for (int a : removed_agents) agent_gone.at(a) = true;
  for (int e : removed_items) {
    if (e < 1 || e > m) throw ValidationError("removed item out of range");
    item_gone[e] = true;
  }
  std::vector<int> agents;
  for (int a = 0; a < n; ++a)
    if (!agent_gone[a]) agents.push_back(a);
  const int k = (int)agents.size();
  if (k > 20) throw SizeGuardError("completion check guard (at most 20 remaining agents)");

  std::vector<Block> segs;
  for (int p = 1; p <= m; ++p) {
    if (item_gone[p]) continue;
    int q = p;
    while (q < m && !item_gone[q + 1]) ++q;
    segs.push_back(Block{p, q + 1});
    p = q;
  }
  Tables T(inst);
  std::map<std::tuple<int, int, unsigned>, bool> memo;
  std::function<bool(int, int, unsigned)> rec = [&](int s, int pos, unsigned used) -> bool {
    if (s == (int)segs.size()) {
      for (int idx = 0; idx < k; ++idx)
        if (!((used >> idx) & 1) && targets[agents[idx]] > 0) return false;
      return true;
    }
    if (pos == segs[s].hi)
      return rec(s + 1, s + 1 < (int)segs.size() ? segs[s + 1].lo : 0, used);
    auto key = std::make_tuple(s, pos, used);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int end = pos; end < segs[s].hi && !ok; ++end) {
      Block blk{pos, end + 1};
      for (int idx = 0; idx < k && !ok; ++idx) {
        if ((used >> idx) & 1) continue;
        if (T.val(agents[idx], blk) >= targets[agents[idx]])
          ok = rec(s, end + 1, used | (1u << idx));
      }
    }
    memo[key] = ok;
    return ok;
  };
  return rec(0, segs.empty() ? 0 : segs[0].lo, 0u);
}

}  // namespace fairdiv
