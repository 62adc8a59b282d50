#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/normal.hpp"
#include "fgh/quotient.hpp"
#include "fgh/radicals.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh::lab {

// Brute-force checks that do not go through innerisers or γ-series.

/// Q is a direct product of nonabelian simple groups (the trivial group
/// counts as the empty product): the minimal normal subgroups are all
/// nonabelian and generate Q.
inline bool is_semisimple(const Group& q) {
  if (q.is_trivial()) return true;
  std::vector<Elem> gens;
  for (const auto& m : minimal_normal_subgroups(q)) {
    if (is_abelian(m)) return false;
    gens.insert(gens.end(), m.generators().begin(), m.generators().end());
  }
  return generated_subgroup(q, gens).order() == q.order();
}

/// N = F(N)E(N) with [F(N), E(N)] = 1, tested as: N/F(N) is semisimple and
/// F(N) commutes with the perfect core of N.
inline bool is_quasinilpotent_structural(const Group& n) {
  const Subgroup fit = fitting(n);
  Subgroup perfect_core = Subgroup::whole(n);
  while (true) {
    Subgroup next = derived_subgroup(perfect_core);
    if (next.order() == perfect_core.order()) break;
    perfect_core = std::move(next);
  }
  for (Elem a : fit.generators()) {
    for (Elem b : perfect_core.generators()) {
      if (n.mul(a, b) != n.mul(b, a)) return false;
    }
  }
  if (fit.order() == n.order()) return true;
  if (fit.is_trivial()) return is_semisimple(n);
  Quotient q(n, fit);
  return is_semisimple(q.group());
}

/// Largest normal subgroup that passes the structural quasinilpotency test.
inline Subgroup largest_normal_quasinilpotent(const Group& g) {
  const auto& normals = normal_subgroups(g);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it) {
    InducedGroup sub(*it);
    if (is_quasinilpotent_structural(sub.group())) return *it;
  }
  return Subgroup::trivial(g);
}

/// Group realising the normal section upper/lower of g.
inline GroupPtr section_group(const Subgroup& upper, const Subgroup& lower) {
  InducedGroup up(upper);
  if (lower.is_trivial()) return up.group_ptr();
  Quotient q(up.group(), up.restrict(lower));
  return q.group_ptr();
}

/// Smallest h admitting a normal series 1 = G_0 ≤ G_1 ≤ ... ≤ G_{2h+1} = G
/// whose factors alternate p-soluble (possibly trivial) and nontrivial
/// semisimple, starting and ending with a p-soluble factor. Found by
/// breadth-first search over the normal subgroup lattice.
inline std::size_t shortest_alternating_length(const Group& g, std::size_t p) {
  const auto& normals = normal_subgroups(g);
  const std::size_t n = normals.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::optional<bool>>> soluble_memo(n, std::vector<std::optional<bool>>(n));
  std::vector<std::vector<std::optional<bool>>> semisimple_memo = soluble_memo;
  auto p_soluble_step = [&](std::size_t lo, std::size_t hi) {
    auto& slot = soluble_memo[lo][hi];
    if (!slot) slot = lo == hi || is_p_soluble(*section_group(normals[hi], normals[lo]), p);
    return *slot;
  };
  auto semisimple_step = [&](std::size_t lo, std::size_t hi) {
    auto& slot = semisimple_memo[lo][hi];
    if (!slot) slot = lo != hi && is_semisimple(*section_group(normals[hi], normals[lo]));
    return *slot;
  };
  auto below = [&](std::size_t lo, std::size_t hi) {
    return normals[lo].is_subgroup_of(normals[hi]);
  };

  // level[i]: fewest semisimple blocks to reach normals[i] after a p-soluble step
  std::vector<std::size_t> level(n, kNone);
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    if (p_soluble_step(0, i)) {
      level[i] = 0;
      frontier.push_back(i);
    }
  }
  const std::size_t top = n - 1;
  for (std::size_t h = 0; level[top] == kNone; ++h) {
    if (frontier.empty()) throw Error("no alternating series exists");
    std::vector<std::size_t> next;
    for (std::size_t lo : frontier) {
      for (std::size_t mid = 0; mid < n; ++mid) {
        if (!below(lo, mid) || !semisimple_step(lo, mid)) continue;
        for (std::size_t hi = 0; hi < n; ++hi) {
          if (level[hi] != kNone || !below(mid, hi) || !p_soluble_step(mid, hi)) continue;
          level[hi] = h + 1;
          next.push_back(hi);
        }
      }
    }
    frontier = std::move(next);
  }
  return level[top];
}

}  // namespace fgh::lab
