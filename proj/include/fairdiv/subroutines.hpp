#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Per-agent threshold; nullopt means no item can qualify (unreachable).
using Threshold = std::optional<Rational>;
using ThresholdVector = std::vector<Threshold>;

// Bipartite graph: edge (agent i, item j) iff alpha[i] is reachable and
// v_i(e_j) >= alpha[i]. Returns a matching of maximum total matched value;
// every matched agent holds exactly one item. Deterministic: augmenting paths
// are searched with agents and items in ascending order, and augmentation
// stops once no path has strictly positive gain.
PartialAllocation matching_weighted(const Instance& inst, const ThresholdVector& alpha);

// Same graph; maximizes the number of matched agents (augmenting-path search
// over agents in ascending order, items tried in ascending order).
PartialAllocation matching_cardinality(const Instance& inst, const ThresholdVector& alpha);

// Left-to-right sweep for goods. Agents already holding a non-empty bundle in
// `partial` are excluded; the rest need a reachable threshold. At each stop
// p = 1..m the candidate S is the maximal run of consecutive unallocated items
// ending at p; when a remaining agent has v_i(S) >= alpha_i, the qualifying
// agent with the largest v_i(S) (ties: lowest index) takes S. Afterwards each
// leftover run of unallocated items joins the allocated bundle adjacent on its
// left (on its right if none). Returns nullopt when the thresholds starve an
// agent whose alpha_i is strictly positive; remaining agents with alpha_i <= 0
// may end empty-handed.
std::optional<Allocation> moving_knife(const Instance& inst, const PartialAllocation& partial,
                                       const ThresholdVector& alpha);

}  // namespace fairdiv
