#pragma once

#include <string>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/normal.hpp"
#include "fgh/number.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh {

/// C_G(H/K) = {g : [g,h] ∈ K for all h ∈ H}; testing generators of H is
/// enough because K is normal.
inline Subgroup centralizer_of_section(const Subgroup& h, const Subgroup& k) {
  const Group& G = h.parent();
  ElementMask m(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elem s : h.generators()) {
      if (!k.contains(G.comm(static_cast<Elem>(x), s))) {
        ok = false;
        break;
      }
    }
    if (ok) m.set(x);
  }
  return Subgroup::from_mask(G, std::move(m));
}

/// Inneriser C*_G(H/K) = H C_G(H/K): the elements acting on H/K as inner
/// automorphisms.
inline Subgroup inneriser(const Subgroup& h, const Subgroup& k) {
  if (h.parent_ptr() != k.parent_ptr()) throw InvalidParameter("subgroups of different groups");
  if (!k.is_subgroup_of(h)) throw InvalidParameter("inneriser needs K ≤ H");
  if (k.order() == h.order()) throw DegenerateFactor("inneriser of a trivial section H/K with K = H");
  if (!is_normal(h) || !is_normal(k)) throw NotNormal("inneriser needs H and K normal in G");
  return join(h, centralizer_of_section(h, k));
}

/// Test hook: `corrupted` drops the H factor and returns only C_G(H/K).
enum class InneriserMode { standard, corrupted };

/// F*(G): the intersection of the innerisers of the factors of a chief series.
inline Subgroup generalized_fitting(const Group& g, InneriserMode mode = InneriserMode::standard,
                                    TieBreak tie = TieBreak::smallest_first) {
  auto compute = [&g, mode, tie] {
    const ChiefSeries cs = chief_series(g, tie);
    ElementMask m = Subgroup::whole(g).mask();
    for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
      const Subgroup& upper = cs.terms[i + 1];
      const Subgroup& lower = cs.terms[i];
      Subgroup c = mode == InneriserMode::standard ? inneriser(upper, lower)
                                                    : centralizer_of_section(upper, lower);
      m &= c.mask();
    }
    return Subgroup::from_mask(g, std::move(m));
  };
  if (tie != TieBreak::smallest_first) return compute();
  return g.memo<Subgroup>(mode == InneriserMode::standard ? "fstar" : "fstar~corrupt", compute);
}

/// O_p(G): the largest normal p-subgroup.
inline Subgroup p_core(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw InvalidPrime(p);
  const auto& all = normal_subgroups(g);
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (is_prime_power_of(it->order(), p)) return *it;
  }
  return all.front();
}

/// F(G) = product of the O_p(G).
inline Subgroup fitting(const Group& g) {
  Subgroup f = Subgroup::trivial(g);
  for (std::size_t p : prime_divisors(g.order())) f = join(f, p_core(g, p));
  return f;
}

inline Subgroup socle(const Group& g) {
  Subgroup s = Subgroup::trivial(g);
  if (g.is_trivial()) return s;
  for (const auto& m : minimal_normal_subgroups(g)) s = join(s, m);
  return s;
}

/// A chief factor is p-soluble iff it is abelian or has p'-order.
inline bool factor_is_p_soluble(const FactorKind& f, std::size_t p) noexcept {
  return f.tag == FactorTag::elementary_abelian || f.order % p != 0;
}

/// p = 0 tests solubility (every chief factor abelian).
inline bool chain_is_p_soluble(const std::vector<Subgroup>& chain, std::size_t p) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    FactorKind f = classify_chief_factor(chain[i + 1], chain[i]);
    if (p == 0 ? f.tag != FactorTag::elementary_abelian : !factor_is_p_soluble(f, p)) return false;
  }
  return true;
}

/// Largest normal p-soluble subgroup (p = 0: soluble radical). Joins every
/// normal subgroup whose G-chief factors below it are p-soluble.
inline Subgroup p_soluble_radical(const Group& g, std::size_t p) {
  if (p != 0 && !is_prime(p)) throw InvalidPrime(p);
  return g.memo<Subgroup>("rp:" + std::to_string(p), [&g, p] {
    const Subgroup one = Subgroup::trivial(g);
    Subgroup r = one;
    for (const auto& n : normal_subgroups(g)) {
      if (n.is_subgroup_of(r)) continue;
      if (chain_is_p_soluble(chief_chain(g, one, n), p)) r = join(r, n);
    }
    if (!chain_is_p_soluble(chief_chain(g, one, r), p)) {
      throw Error("join of p-soluble normal subgroups is not p-soluble");
    }
    return r;
  });
}

inline Subgroup soluble_radical(const Group& g) { return p_soluble_radical(g, 0); }

// ---------------------------------------------------------------------------
// class predicates

inline bool is_nilpotent(const Group& g) {
  std::size_t prod = 1;
  for (std::size_t p : prime_divisors(g.order())) prod *= p_core(g, p).order();
  return prod == g.order();
}

inline bool is_soluble(const Group& g) {
  Subgroup d = Subgroup::whole(g);
  while (!d.is_trivial()) {
    Subgroup next = derived_subgroup(d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

inline bool is_p_soluble(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw InvalidPrime(p);
  for (const auto& f : chief_series(g).factor_kinds) {
    if (!factor_is_p_soluble(f, p)) return false;
  }
  return true;
}

inline bool is_quasinilpotent(const Group& g) {
  return generalized_fitting(g).order() == g.order();
}

inline bool is_simple(const Group& g) { return normal_subgroups(g).size() == 2; }

inline bool is_perfect(const Group& g) { return derived_subgroup(g).order() == g.order(); }

enum class GroupClass { nilpotent, soluble, p_soluble, quasinilpotent, simple, perfect };

inline bool class_predicate(GroupClass kind, const Group& g, std::size_t p = 0) {
  switch (kind) {
    case GroupClass::nilpotent: return is_nilpotent(g);
    case GroupClass::soluble: return is_soluble(g);
    case GroupClass::p_soluble: return is_p_soluble(g, p);
    case GroupClass::quasinilpotent: return is_quasinilpotent(g);
    case GroupClass::simple: return is_simple(g);
    case GroupClass::perfect: return is_perfect(g);
  }
  return false;
}

/// H is subnormal in G iff iterated normal closures G ⊇ H^G ⊇ H^(H^G) ⊇ ...
/// descend to H.
inline bool is_subnormal(const Subgroup& h) {
  Subgroup k = Subgroup::whole(h.parent());
  while (true) {
    Subgroup next = normal_closure_in(h, k);
    if (next.order() == h.order()) return true;
    if (next.order() == k.order()) return false;
    k = std::move(next);
  }
}

}  // namespace fgh
