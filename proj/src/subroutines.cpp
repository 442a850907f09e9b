#include "fairdiv/subroutines.hpp"

#include <algorithm>
#include <vector>

namespace fairdiv {

namespace {

bool edge_ok(const Instance& inst, const ThresholdVector& alpha, int i, int j1) {
  if (!alpha[i].has_value()) return false;
  return inst.item_value(i, j1) >= *alpha[i];
}

}  // namespace

PartialAllocation matching_weighted(const Instance& inst, const ThresholdVector& alpha) {
  const int n = inst.n, m = inst.m;
  if ((int)alpha.size() != n) throw ValidationError("threshold vector size mismatch");
  // Successive shortest augmenting paths on the residual graph, exact
  // arithmetic throughout. Nodes: 0 = source, 1..n agents, n+1..n+m items,
  // n+m+1 = sink. Stops when the best augmenting path no longer increases the
  // total matched value.
  const int S = 0, T = n + m + 1, V = n + m + 2;
  std::vector<int> match_of_agent(n, -1);  // item index 1..m, or -1
  std::vector<int> match_of_item(m + 1, -1);

  for (;;) {
    std::vector<bool> reach(V, false);
    std::vector<Rational> dist(V);
    std::vector<int> par(V, -1);
    reach[S] = true;
    dist[S] = 0;
    // Bellman-Ford with a fixed relaxation order; updates only on a strict
    // improvement keep the result deterministic.
    for (int round = 0; round < V; ++round) {
      bool changed = false;
      auto relax = [&](int u, int v, const Rational& cost) {
        if (!reach[u]) return;
        Rational nd = dist[u] + cost;
        if (!reach[v] || nd < dist[v]) {
          reach[v] = true;
          dist[v] = nd;
          par[v] = u;
          changed = true;
        }
      };
      for (int i = 0; i < n; ++i)
        if (match_of_agent[i] == -1) relax(S, 1 + i, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = 1; j <= m; ++j)
          if (edge_ok(inst, alpha, i, j)) {
            if (match_of_agent[i] == j)
              relax(n + j, 1 + i, inst.item_value(i, j));
            else
              relax(1 + i, n + j, -inst.item_value(i, j));
          }
      for (int j = 1; j <= m; ++j)
        if (match_of_item[j] == -1) relax(n + j, T, Rational(0));
      if (!changed) break;
    }
    if (!reach[T] || dist[T] >= 0) break;  // no strictly positive gain left
    // Flip the path.
    int v = T;
    while (v != S) {
      int u = par[v];
      if (u >= 1 && u <= n && v > n && v < T) {
        match_of_agent[u - 1] = v - n;
        match_of_item[v - n] = u - 1;
      }
      // Reverse edges item->agent are undone implicitly by the forward
      // assignments along the path.
      v = u;
    }
  }

  PartialAllocation out;
  out.bundles.assign(n, Block{m + 1, m + 1});
  for (int i = 0; i < n; ++i)
    if (match_of_agent[i] != -1) out.bundles[i] = Block{match_of_agent[i], match_of_agent[i] + 1};
  return out;
}

namespace {

bool kuhn_try(const Instance& inst, const ThresholdVector& alpha, int i,
              std::vector<bool>& visited, std::vector<int>& match_of_item) {
  for (int j = 1; j <= inst.m; ++j) {
    if (!edge_ok(inst, alpha, i, j) || visited[j]) continue;
    visited[j] = true;
    if (match_of_item[j] == -1 ||
        kuhn_try(inst, alpha, match_of_item[j], visited, match_of_item)) {
      match_of_item[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

PartialAllocation matching_cardinality(const Instance& inst, const ThresholdVector& alpha) {
  const int n = inst.n, m = inst.m;
  if ((int)alpha.size() != n) throw ValidationError("threshold vector size mismatch");
  std::vector<int> match_of_item(m + 1, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> visited(m + 1, false);
    kuhn_try(inst, alpha, i, visited, match_of_item);
  }
  PartialAllocation out;
  out.bundles.assign(n, Block{m + 1, m + 1});
  for (int j = 1; j <= m; ++j)
    if (match_of_item[j] != -1) out.bundles[match_of_item[j]] = Block{j, j + 1};
  return out;
}

std::optional<Allocation> moving_knife(const Instance& inst, const PartialAllocation& partial,
                                       const ThresholdVector& alpha) {
  const int n = inst.n, m = inst.m;
  if ((int)partial.bundles.size() != n) throw ValidationError("partial allocation size mismatch");
  if ((int)alpha.size() != n) throw ValidationError("threshold vector size mismatch");

  std::vector<int> owner(m + 2, -1);  // 1..m; -1 = unallocated
  std::vector<Block> bundles(partial.bundles);
  std::vector<bool> served(n, false);
  for (int i = 0; i < n; ++i) {
    if (!bundles[i].empty()) {
      served[i] = true;
      for (int e = bundles[i].lo; e < bundles[i].hi; ++e) owner[e] = i;
    } else {
      bundles[i] = Block{m + 1, m + 1};
    }
  }
  for (int i = 0; i < n; ++i)
    if (!served[i] && !alpha[i].has_value())
      throw ValidationError("agent without bundle needs a reachable threshold");

  for (int p = 1; p <= m; ++p) {
    if (owner[p] != -1) continue;
    int lo = p;
    while (lo > 1 && owner[lo - 1] == -1) --lo;
    Block S{lo, p + 1};
    int best = -1;
    Rational best_v;
    for (int i = 0; i < n; ++i) {
      if (served[i]) continue;
      Rational v = value(inst, i, S);
      if (v >= *alpha[i] && (best == -1 || v > best_v)) {
        best = i;
        best_v = v;
      }
    }
    if (best == -1) continue;
    served[best] = true;
    bundles[best] = S;
    for (int e = S.lo; e < S.hi; ++e) owner[e] = best;
  }

  for (int i = 0; i < n; ++i)
    if (!served[i] && *alpha[i] > 0) return std::nullopt;

  // Attach each leftover run to the bundle on its left (right when the run
  // touches the line's start).
  for (int p = 1; p <= m; ++p) {
    if (owner[p] != -1) continue;
    int q = p;
    while (q < m && owner[q + 1] == -1) ++q;
    if (p > 1) {
      int i = owner[p - 1];
      bundles[i].hi = q + 1;
      for (int e = p; e <= q; ++e) owner[e] = i;
    } else if (q < m) {
      int i = owner[q + 1];
      bundles[i].lo = p;
      for (int e = p; e <= q; ++e) owner[e] = i;
    } else {
      throw GuaranteeError("no allocated bundle to absorb leftover items");
    }
  }

  Allocation out;
  out.bundles = std::move(bundles);
  return out;
}

}  // namespace fairdiv
