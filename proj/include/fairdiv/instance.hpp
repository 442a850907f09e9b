#pragma once

#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class Kind { Goods, Chores };

std::string kind_name(Kind kind);

// Half-open 1-based item range [lo, hi); empty iff lo == hi.
struct Block {
  int lo = 1;
  int hi = 1;

  bool empty() const { return lo == hi; }
  int size() const { return hi - lo; }
  bool contains(int item) const { return lo <= item && item < hi; }
  friend bool operator==(const Block&, const Block&) = default;
};

// One connected bundle per agent; together the non-empty bundles tile {1..m}.
struct Allocation {
  std::vector<Block> bundles;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Like Allocation but the bundles need not cover the line (e.g. matching output).
struct PartialAllocation {
  std::vector<Block> bundles;
};

// n agents x m line-ordered items with exact rational values.
// Goods: every entry >= 0, every row sums to exactly 1.
// Chores: every entry <= 0, every row sums to exactly -1.
struct Instance {
  Kind kind = Kind::Goods;
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> values;  // values[agent][item], 0-based

  const Rational& item_value(int agent, int item1) const {
    return values.at(agent).at(item1 - 1);
  }
};

// Checks shape, signs, and exact row normalization; throws ValidationError.
void check_instance(const Instance& inst);

// Rescales each row to sum to exactly +1/-1. Sign violations and zero-sum rows
// still throw ValidationError.
Instance normalized(Instance inst);

// Sum of the agent's values over the block's items; 0 for an empty block.
// Throws std::out_of_range on bad indices.
Rational value(const Instance& inst, int agent, Block block);

// Violation report; empty means the allocation is valid for the instance.
std::vector<std::string> validate(const Instance& inst, const Allocation& alloc);

// Throws ValidationError when validate() reports anything.
void require_valid(const Instance& inst, const Allocation& alloc);

// Sum over agents of their own-bundle values.
Rational utilitarian_welfare(const Instance& inst, const Allocation& alloc);

// Minimum own-bundle value over agents; empty bundles contribute 0.
Rational egalitarian_welfare(const Instance& inst, const Allocation& alloc);

// Proportionality up to one item for a single agent's bundle.
// Goods: v_i(A_i) >= 1/n, or some adjacent item e has v_i(A_i + e) >= 1/n,
//        or A_i is empty and some single item has value >= 1/n.
// Chores: A_i empty, or v_i(A_i) >= -1/n, or removing one endpoint item
//        gives value >= -1/n.
// A bundle that already meets the proportional share counts as PROP1 even when
// no item can be added or removed.
bool is_prop1(const Instance& inst, const Allocation& alloc, int agent);

bool is_prop1_all(const Instance& inst, const Allocation& alloc);

// Per-agent exact maximin share values with defining partitions.
struct MmsProfile {
  std::vector<Rational> mms;              // one value per agent
  std::vector<Allocation> partition;      // one defining partition per agent
};

// True iff every agent's own-bundle value >= her MMS value (exact comparison).
bool is_mms_fair(const Instance& inst, const Allocation& alloc, const MmsProfile& profile);

}  // namespace fairdiv
