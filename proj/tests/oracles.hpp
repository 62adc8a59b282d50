#pragma once

// Brute-force reference implementations over explicit permutation sets. They
// share nothing with the library beyond the Permutation value type.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/permutation.hpp"

namespace oracle {

using fgh::Permutation;
using PermSet = std::set<Permutation>;

inline Permutation compose(const Permutation& p, const Permutation& q) {
  std::vector<std::size_t> img(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) img[i - 1] = q.image(p.image(i));
  return Permutation::from_images(img);
}

inline Permutation invert(const Permutation& p) {
  std::vector<std::size_t> img(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) img[p.image(i) - 1] = i;
  return Permutation::from_images(img);
}

inline PermSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  PermSet out{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Permutation y = compose(x, s);
        if (out.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline PermSet closure_of(std::size_t degree, const PermSet& s) {
  return closure(degree, std::vector<Permutation>(s.begin(), s.end()));
}

inline PermSet to_set(const fgh::Subgroup& h) {
  PermSet out;
  for (fgh::Elem x : h.elements()) out.insert(h.parent().permutation(x));
  return out;
}

inline PermSet to_set(const fgh::Group& g) {
  PermSet out;
  for (std::size_t x = 0; x < g.order(); ++x) out.insert(g.permutation(static_cast<fgh::Elem>(x)));
  return out;
}

inline PermSet product(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(compose(x, y));
  }
  return out;
}

inline bool is_closed(const PermSet& s) {
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (!s.contains(compose(x, y))) return false;
    }
  }
  return true;
}

inline PermSet conjugate(const PermSet& s, const Permutation& g) {
  PermSet out;
  const Permutation gi = invert(g);
  for (const auto& x : s) out.insert(compose(compose(gi, x), g));
  return out;
}

inline bool is_normal(const PermSet& h, const PermSet& g) {
  return std::all_of(g.begin(), g.end(), [&](const Permutation& x) { return conjugate(h, x) == h; });
}

/// Every subgroup, as the fixpoint of joining cyclic subgroups pairwise.
inline std::set<PermSet> lattice(const PermSet& g) {
  const std::size_t degree = g.begin()->degree();
  std::set<PermSet> subs;
  for (const auto& x : g) subs.insert(closure(degree, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PermSet> current(subs.begin(), subs.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        PermSet u = current[i];
        u.insert(current[j].begin(), current[j].end());
        if (subs.insert(closure_of(degree, u)).second) grew = true;
      }
    }
  }
  return subs;
}

inline std::set<PermSet> normal_subgroups(const PermSet& g) {
  std::set<PermSet> out;
  for (const auto& h : lattice(g)) {
    if (is_normal(h, g)) out.insert(h);
  }
  return out;
}

inline PermSet centralizer(const PermSet& g, const PermSet& s) {
  PermSet out;
  for (const auto& x : g) {
    if (std::all_of(s.begin(), s.end(), [&](const Permutation& y) { return compose(x, y) == compose(y, x); })) {
      out.insert(x);
    }
  }
  return out;
}

inline PermSet intersect(const PermSet& a, const PermSet& b) {
  PermSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool permutes(const PermSet& a, const PermSet& b) { return product(a, b) == product(b, a); }

}  // namespace oracle
