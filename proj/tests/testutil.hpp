#pragma once

#include <random>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace testutil {

using namespace fairdiv;

inline Instance make(Kind kind, const std::vector<std::vector<std::string>>& rows) {
  Instance inst;
  inst.kind = kind;
  inst.n = static_cast<int>(rows.size());
  inst.m = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    std::vector<Rational> vals;
    for (const auto& cell : r) vals.push_back(parse_rational(cell));
    inst.values.push_back(std::move(vals));
  }
  check_instance(inst);
  return inst;
}

inline Instance goods(const std::vector<std::vector<std::string>>& rows) {
  return make(Kind::Goods, rows);
}

inline Instance chores(const std::vector<std::vector<std::string>>& rows) {
  return make(Kind::Chores, rows);
}

inline Allocation alloc(const std::vector<std::pair<int, int>>& blocks) {
  Allocation a;
  for (auto [lo, hi] : blocks) a.bundles.push_back(Block{lo, hi});
  return a;
}

// Deterministic corpus: weights a/b with a <= 60, b <= 6 drawn per item, rows
// rescaled exactly so |row sum| = 1 (all-zero rows redrawn).
inline std::vector<Instance> random_corpus(Kind kind, int count, int n_lo, int n_hi, int m_lo,
                                           int m_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    Instance inst;
    inst.kind = kind;
    inst.n = n_lo + static_cast<int>(rng() % (n_hi - n_lo + 1));
    inst.m = m_lo + static_cast<int>(rng() % (m_hi - m_lo + 1));
    bool ok = true;
    for (int i = 0; i < inst.n && ok; ++i) {
      std::vector<Rational> raw;
      Rational sum(0);
      for (int j = 0; j < inst.m; ++j) {
        Rational w(static_cast<int>(rng() % 61), 1 + static_cast<int>(rng() % 6));
        raw.push_back(w);
        sum += w;
      }
      if (sum == 0) {
        ok = false;
        break;
      }
      for (auto& w : raw) w = (kind == Kind::Goods ? w : -w) / sum;
      inst.values.push_back(std::move(raw));
    }
    if (!ok) continue;
    check_instance(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace testutil
