#include "fairdiv/instance.hpp"

#include <algorithm>

namespace fairdiv {

std::string kind_name(Kind kind) {
  return kind == Kind::Goods ? "goods" : "chores";
}

void check_instance(const Instance& inst) {
  if (inst.n < 1) throw ValidationError("agent count must be >= 1");
  if (inst.m < 1) throw ValidationError("item count must be >= 1");
  if (static_cast<int>(inst.values.size()) != inst.n) {
    throw ValidationError("value matrix row count does not match agent count");
  }
  const Rational target = inst.kind == Kind::Goods ? Rational(1) : Rational(-1);
  for (int i = 0; i < inst.n; ++i) {
    const auto& row = inst.values[i];
    if (static_cast<int>(row.size()) != inst.m) {
      throw ValidationError("row " + std::to_string(i + 1) + " has wrong item count");
    }
    Rational sum = 0;
    for (int j = 0; j < inst.m; ++j) {
      const Rational& v = row[j];
      if (inst.kind == Kind::Goods && v < 0) {
        throw ValidationError("goods value is negative at agent " + std::to_string(i + 1) +
                              ", item " + std::to_string(j + 1));
      }
      if (inst.kind == Kind::Chores && v > 0) {
        throw ValidationError("chores value is positive at agent " + std::to_string(i + 1) +
                              ", item " + std::to_string(j + 1));
      }
      sum += v;
    }
    if (sum != target) {
      throw ValidationError("row " + std::to_string(i + 1) + " sums to " + format_rational(sum) +
                            ", expected " + format_rational(target) +
                            " (pass --normalize to rescale)");
    }
  }
}

Instance normalized(Instance inst) {
  if (inst.n < 1) throw ValidationError("agent count must be >= 1");
  if (inst.m < 1) throw ValidationError("item count must be >= 1");
  const Rational target = inst.kind == Kind::Goods ? Rational(1) : Rational(-1);
  for (int i = 0; i < inst.n; ++i) {
    auto& row = inst.values[i];
    Rational sum = 0;
    for (const Rational& v : row) {
      if (inst.kind == Kind::Goods && v < 0) {
        throw ValidationError("goods value is negative; cannot normalize row " +
                              std::to_string(i + 1));
      }
      if (inst.kind == Kind::Chores && v > 0) {
        throw ValidationError("chores value is positive; cannot normalize row " +
                              std::to_string(i + 1));
      }
      sum += v;
    }
    if (sum == 0) {
      throw ValidationError("row " + std::to_string(i + 1) + " sums to zero; cannot normalize");
    }
    const Rational scale = target / sum;
    for (Rational& v : row) v *= scale;
  }
  check_instance(inst);
  return inst;
}

Rational value(const Instance& inst, int agent, Block block) {
  if (agent < 0 || agent >= inst.n) throw std::out_of_range("agent index out of range");
  if (block.lo < 1 || block.lo > block.hi || block.hi > inst.m + 1) {
    throw std::out_of_range("block out of range");
  }
  Rational sum = 0;
  for (int j = block.lo; j < block.hi; ++j) sum += inst.values[agent][j - 1];
  return sum;
}

std::vector<std::string> validate(const Instance& inst, const Allocation& alloc) {
  std::vector<std::string> violations;
  if (static_cast<int>(alloc.bundles.size()) != inst.n) {
    violations.push_back("bundle count " + std::to_string(alloc.bundles.size()) +
                         " does not match agent count " + std::to_string(inst.n));
    return violations;
  }
  std::vector<int> owner(inst.m + 1, -1);
  for (int i = 0; i < inst.n; ++i) {
    const Block& b = alloc.bundles[i];
    if (b.lo < 1 || b.lo > b.hi || b.hi > inst.m + 1) {
      violations.push_back("agent " + std::to_string(i + 1) + " bundle [" + std::to_string(b.lo) +
                           "," + std::to_string(b.hi) + ") is out of range");
      continue;
    }
    for (int j = b.lo; j < b.hi; ++j) {
      if (owner[j] != -1) {
        violations.push_back("item " + std::to_string(j) + " allocated to both agent " +
                             std::to_string(owner[j] + 1) + " and agent " + std::to_string(i + 1));
      } else {
        owner[j] = i;
      }
    }
  }
  for (int j = 1; j <= inst.m; ++j) {
    if (owner[j] == -1) {
      violations.push_back("item " + std::to_string(j) + " is not allocated");
    }
  }
  return violations;
}

void require_valid(const Instance& inst, const Allocation& alloc) {
  auto violations = validate(inst, alloc);
  if (!violations.empty()) throw ValidationError("invalid allocation: " + violations.front());
}

Rational utilitarian_welfare(const Instance& inst, const Allocation& alloc) {
  require_valid(inst, alloc);
  Rational sum = 0;
  for (int i = 0; i < inst.n; ++i) sum += value(inst, i, alloc.bundles[i]);
  return sum;
}

Rational egalitarian_welfare(const Instance& inst, const Allocation& alloc) {
  require_valid(inst, alloc);
  Rational worst = value(inst, 0, alloc.bundles[0]);
  for (int i = 1; i < inst.n; ++i) {
    worst = std::min(worst, value(inst, i, alloc.bundles[i]));
  }
  return worst;
}

bool is_prop1(const Instance& inst, const Allocation& alloc, int agent) {
  require_valid(inst, alloc);
  const Block& b = alloc.bundles[agent];
  const Rational share = inst.kind == Kind::Goods
                             ? Rational(1) / inst.n
                             : Rational(-1) / inst.n;
  const Rational own = value(inst, agent, b);
  if (inst.kind == Kind::Goods) {
    if (own >= share) return true;
    if (b.empty()) {
      for (int j = 1; j <= inst.m; ++j) {
        if (inst.item_value(agent, j) >= share) return true;
      }
      return false;
    }
    if (b.lo > 1 && own + inst.item_value(agent, b.lo - 1) >= share) return true;
    if (b.hi <= inst.m && own + inst.item_value(agent, b.hi) >= share) return true;
    return false;
  }
  // Chores: value 0 of an empty bundle always meets -1/n.
  if (b.empty()) return true;
  if (own >= share) return true;
  if (own - inst.item_value(agent, b.lo) >= share) return true;
  if (own - inst.item_value(agent, b.hi - 1) >= share) return true;
  return false;
}

bool is_prop1_all(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.n; ++i) {
    if (!is_prop1(inst, alloc, i)) return false;
  }
  return true;
}

bool is_mms_fair(const Instance& inst, const Allocation& alloc, const MmsProfile& profile) {
  require_valid(inst, alloc);
  if (static_cast<int>(profile.mms.size()) != inst.n) {
    throw ValidationError("MMS profile does not match the instance's agent count");
  }
  for (int i = 0; i < inst.n; ++i) {
    if (value(inst, i, alloc.bundles[i]) < profile.mms[i]) return false;
  }
  return true;
}

}  // namespace fairdiv
