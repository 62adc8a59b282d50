#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/number.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh {

/// Default cap on group order for full subgroup enumeration.
inline constexpr std::size_t kDefaultLatticeCap = 600;

/// Distinct cyclic subgroups <x>, sorted canonically (trivial first).
inline const std::vector<Subgroup>& cyclic_subgroups(const Group& g) {
  return g.memo<std::vector<Subgroup>>("cyclic_subgroups", [&g] {
    std::unordered_map<ElementMask, bool, ElementMaskHash> seen;
    std::vector<Subgroup> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
      ElementMask m(g.order());
      Elem e = Group::identity();
      do {
        m.set(e);
        e = g.mul(e, static_cast<Elem>(x));
      } while (e != Group::identity());
      if (seen.emplace(m, true).second) {
        std::vector<Elem> gens;
        if (x != 0) gens.push_back(static_cast<Elem>(x));
        out.push_back(Subgroup::from_parts(g, std::move(m), std::move(gens)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

/// Every subgroup of G, sorted by (order, element key). Grown from cyclic
/// subgroups by repeatedly adjoining elements of prime-power order.
inline const std::vector<Subgroup>& all_subgroups(const Group& g,
                                                  std::size_t lattice_cap = kDefaultLatticeCap) {
  if (g.order() > lattice_cap) throw LatticeCapExceeded(g.order(), lattice_cap);
  return g.memo<std::vector<Subgroup>>("lattice", [&g] {
    const auto& cyclic = cyclic_subgroups(g);
    std::vector<Elem> pp_gens;
    for (const auto& c : cyclic) {
      if (is_prime_power(c.order())) pp_gens.push_back(c.generators().front());
    }
    std::unordered_map<ElementMask, bool, ElementMaskHash> seen;
    std::vector<Subgroup> all;
    for (const auto& c : cyclic) {
      seen.emplace(c.mask(), true);
      all.push_back(c);
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
      for (Elem x : pp_gens) {
        if (all[i].contains(x)) continue;
        Closure c(g, all[i]);
        c.add(x);
        if (seen.contains(c.mask())) continue;
        seen.emplace(c.mask(), true);
        all.push_back(std::move(c).finish());
      }
    }
    std::sort(all.begin(), all.end());
    return all;
  });
}

/// Maximal subgroups (proper, contained in no other proper subgroup).
inline std::vector<Subgroup> maximal_subgroups(const Group& g,
                                               std::size_t lattice_cap = kDefaultLatticeCap) {
  const auto& all = all_subgroups(g, lattice_cap);
  std::vector<Subgroup> out;
  if (g.is_trivial()) return out;
  const std::size_t n = all.size() - 1;  // all.back() is G
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = n; j-- > i + 1;) {
      if (all[j].order() == all[i].order()) break;
      if (all[j].order() % all[i].order() == 0 && all[i].is_subgroup_of(all[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

/// Φ(G): intersection of the maximal subgroups; Φ(1) = 1.
inline Subgroup frattini(const Group& g, std::size_t lattice_cap = kDefaultLatticeCap) {
  if (g.order() > lattice_cap) throw LatticeCapExceeded(g.order(), lattice_cap);
  return g.memo<Subgroup>("frattini", [&g, lattice_cap] {
    ElementMask m = Subgroup::whole(g).mask();
    for (const auto& s : maximal_subgroups(g, lattice_cap)) m &= s.mask();
    return Subgroup::from_mask(g, std::move(m));
  });
}

}  // namespace fgh
