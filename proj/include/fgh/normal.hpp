#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/number.hpp"
#include "fgh/quotient.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh {

/// All normal subgroups of G sorted by (order, element key). Built from the
/// normal closures of conjugacy classes, closed under joins.
inline const std::vector<Subgroup>& normal_subgroups(const Group& g) {
  return g.memo<std::vector<Subgroup>>("normal_subgroups", [&g] {
    std::vector<Subgroup> closures;
    std::unordered_map<ElementMask, std::size_t, ElementMaskHash> seen;
    std::vector<Subgroup> all;
    auto insert = [&](Subgroup s) -> bool {
      if (seen.contains(s.mask())) return false;
      seen.emplace(s.mask(), all.size());
      all.push_back(std::move(s));
      return true;
    };
    insert(Subgroup::trivial(g));
    for (const auto& cls : g.conjugacy_classes()) {
      if (cls.front() == Group::identity()) continue;
      Subgroup c = normal_closure_of(g, cls);
      if (insert(c)) closures.push_back(std::move(c));
    }
    // Every normal subgroup is a join of class closures.
    for (std::size_t i = 1; i < all.size(); ++i) {
      for (const auto& c : closures) {
        if (c.is_subgroup_of(all[i])) continue;
        insert(join(all[i], c));
      }
    }
    std::sort(all.begin(), all.end());
    return all;
  });
}

/// Index of a normal subgroup inside normal_subgroups(G).
inline std::size_t normal_index(const Group& g, const Subgroup& n) {
  const auto& all = normal_subgroups(g);
  auto it = std::lower_bound(all.begin(), all.end(), n);
  if (it == all.end() || !(*it == n)) throw NotNormal("subgroup is not normal");
  return static_cast<std::size_t>(it - all.begin());
}

/// Normal subgroups M of G with K < M and no normal subgroup strictly between.
inline std::vector<Subgroup> minimal_normal_over(const Group& g, const Subgroup& k) {
  const auto& all = normal_subgroups(g);
  std::vector<const Subgroup*> above;
  for (const auto& m : all) {
    if (m.order() > k.order() && k.is_subgroup_of(m)) above.push_back(&m);
  }
  std::vector<Subgroup> out;
  for (const Subgroup* m : above) {
    bool minimal = true;
    for (const Subgroup* x : above) {
      if (x->order() >= m->order()) break;
      if (x->is_subgroup_of(*m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(*m);
  }
  return out;
}

inline std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  if (g.is_trivial()) throw EmptyStructure("trivial group has no minimal normal subgroups");
  return minimal_normal_over(g, Subgroup::trivial(g));
}

// ---------------------------------------------------------------------------
// chief series

enum class FactorTag { elementary_abelian, nonabelian_semisimple };

struct FactorKind {
  FactorTag tag;
  std::optional<std::size_t> prime;  // set for elementary abelian factors
  std::size_t order;

  friend bool operator==(const FactorKind&, const FactorKind&) = default;
};

/// Kind of a chief factor H/K: elementary abelian p-group when [H,H] ≤ K.
inline FactorKind classify_chief_factor(const Subgroup& h, const Subgroup& k) {
  const Group& G = h.parent();
  const std::size_t ord = h.order() / k.order();
  bool abelian = true;
  for (Elem a : h.generators()) {
    for (Elem b : h.generators()) {
      if (!k.contains(G.comm(a, b))) {
        abelian = false;
        break;
      }
    }
    if (!abelian) break;
  }
  if (abelian) return {FactorTag::elementary_abelian, smallest_prime_factor(ord), ord};
  return {FactorTag::nonabelian_semisimple, std::nullopt, ord};
}

/// Chief-series tie-break: among minimal normal candidates over the current
/// term, `smallest_first` takes the least order then least key (the default);
/// `largest_first` takes the greatest order then greatest key.
enum class TieBreak { smallest_first, largest_first };

struct ChiefSeries {
  std::vector<Subgroup> terms;  // 1 = terms[0] < ... < terms.back() = G
  std::vector<FactorKind> factor_kinds;

  std::size_t length() const noexcept { return factor_kinds.size(); }
};

inline ChiefSeries chief_series(const Group& g, TieBreak tie = TieBreak::smallest_first) {
  ChiefSeries cs;
  cs.terms.push_back(Subgroup::trivial(g));
  while (cs.terms.back().order() < g.order()) {
    auto candidates = minimal_normal_over(g, cs.terms.back());
    // candidates arrive in canonical order
    const Subgroup& next =
        tie == TieBreak::smallest_first ? candidates.front() : candidates.back();
    cs.factor_kinds.push_back(classify_chief_factor(next, cs.terms.back()));
    cs.terms.push_back(next);
  }
  return cs;
}

/// A chief series of G through normal subgroups from `lower` up to `upper`
/// (both normal in G, lower ≤ upper).
inline std::vector<Subgroup> chief_chain(const Group& g, const Subgroup& lower,
                                         const Subgroup& upper) {
  std::vector<Subgroup> chain{lower};
  while (chain.back().order() < upper.order()) {
    for (auto& m : minimal_normal_over(g, chain.back())) {
      if (m.is_subgroup_of(upper)) {
        chain.push_back(std::move(m));
        break;
      }
    }
  }
  return chain;
}

}  // namespace fgh
