#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "fgh/group.hpp"

namespace fgh {

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw InvalidParameter("subgroups of different groups");
}

/// The set {a*b : a in A, b in B}.
inline ElementMask set_product(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const Group& g = a.parent();
  ElementMask out(g.order());
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) out.set(g.mul(x, y));
  }
  return out;
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  return Subgroup::from_mask(a.parent(), a.mask() & b.mask());
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  Closure c(a.parent(), a);
  for (Elem s : b.generators()) c.add(s);
  return std::move(c).finish();
}

/// |A B| = |A||B|/|A ∩ B|.
inline std::size_t product_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / a.mask().intersection_count(b.mask());
}

/// H^g.
inline Subgroup conjugate(const Subgroup& h, Elem g) {
  const Group& G = h.parent();
  ElementMask m(G.order());
  for (Elem x : h.elements()) m.set(G.conj(x, g));
  std::vector<Elem> gens;
  for (Elem s : h.generators()) gens.push_back(G.conj(s, g));
  return Subgroup::from_parts(G, std::move(m), std::move(gens));
}

/// True if every generator of `by` conjugates H into itself.
inline bool is_normalized_by(const Subgroup& h, std::span<const Elem> by) {
  const Group& G = h.parent();
  for (Elem g : by) {
    for (Elem s : h.generators()) {
      if (!h.contains(G.conj(s, g))) return false;
    }
  }
  return true;
}

inline bool is_normal(const Subgroup& h) { return is_normalized_by(h, h.parent().generators()); }

/// H normal in the subgroup K (H ≤ K assumed).
inline bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  return is_normalized_by(h, k.generators());
}

/// Smallest subgroup normalised by K containing H (both subgroups of one group).
inline Subgroup normal_closure_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& G = h.parent();
  Closure c(G, h);
  std::vector<Elem> pending(h.generators());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (Elem g : k.generators()) {
      Elem y = G.conj(pending[i], g);
      if (c.add(y)) pending.push_back(y);
    }
  }
  return std::move(c).finish();
}

inline Subgroup normal_closure(const Subgroup& h) {
  return normal_closure_in(h, Subgroup::whole(h.parent()));
}

/// Normal closure of an arbitrary element set.
inline Subgroup normal_closure_of(const Group& g, std::span<const Elem> elems) {
  return normal_closure(generated_subgroup(g, elems));
}

/// C_G(S) for an element set S.
inline Subgroup centralizer_of_set(const Group& g, std::span<const Elem> s) {
  ElementMask m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : s) {
      if (g.mul(static_cast<Elem>(x), y) != g.mul(y, static_cast<Elem>(x))) {
        ok = false;
        break;
      }
    }
    if (ok) m.set(x);
  }
  return Subgroup::from_mask(g, std::move(m));
}

inline Subgroup centralizer(const Subgroup& h) {
  return centralizer_of_set(h.parent(), h.generators());
}

inline Subgroup center(const Group& g) { return centralizer_of_set(g, g.generators()); }

/// Core A_G: the largest normal subgroup of G inside A.
inline Subgroup subgroup_core(const Subgroup& a) {
  const Group& G = a.parent();
  ElementMask m = a.mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem g : G.generators()) {
      ElementMask next(G.order());
      for (Elem x : m.elements()) {
        // x survives when x^g stays inside the current core candidate
        if (m.test(G.conj(x, g))) next.set(x);
      }
      if (!(next == m)) {
        m = std::move(next);
        changed = true;
      }
    }
  }
  return Subgroup::from_mask(G, std::move(m));
}

/// Commutator subgroup [H, K] of two subgroups normalised by each other's
/// generators' ambient group (computed as a normal closure in <H, K>).
inline Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& G = h.parent();
  std::vector<Elem> comms;
  for (Elem a : h.generators()) {
    for (Elem b : k.generators()) {
      Elem c = G.comm(a, b);
      if (c != Group::identity()) comms.push_back(c);
    }
  }
  return normal_closure_in(generated_subgroup(G, comms), join(h, k));
}

inline Subgroup derived_subgroup(const Subgroup& h) { return commutator_subgroup(h, h); }

inline Subgroup derived_subgroup(const Group& g) {
  return derived_subgroup(Subgroup::whole(g));
}

inline bool is_abelian(const Subgroup& h) {
  const Group& G = h.parent();
  for (Elem a : h.generators()) {
    for (Elem b : h.generators()) {
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  }
  return true;
}

/// Coarse isomorphism invariant: order, sorted class sizes, and the
/// element-order histogram.
struct Signature {
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  std::map<std::size_t, std::size_t> element_orders;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(const Group& g) {
  Signature s;
  s.order = g.order();
  for (const auto& c : g.conjugacy_classes()) s.class_sizes.push_back(c.size());
  std::sort(s.class_sizes.begin(), s.class_sizes.end());
  for (std::size_t x = 0; x < g.order(); ++x) ++s.element_orders[g.element_order(static_cast<Elem>(x))];
  return s;
}

}  // namespace fgh
