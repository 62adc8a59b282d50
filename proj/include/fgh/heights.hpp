#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgh/functorial.hpp"
#include "fgh/normal.hpp"
#include "fgh/quotient.hpp"
#include "fgh/radicals.hpp"
#include "fgh/series.hpp"

namespace fgh {

/// h*(G): height of the F*-series.
inline Height generalized_fitting_height(const Group& g, const CalculusOptions& opts = {}) {
  return gamma_height(builtin_functorial(Atom::Fstar, 0, opts), g);
}

/// h(G): Fitting height; Unbounded for nonsoluble groups.
inline Height fitting_height(const Group& g) {
  return gamma_height(builtin_functorial(Atom::Fit), g);
}

/// λ_p(G): 0 for p-soluble groups, otherwise the height of the F̄_p-series.
inline std::size_t non_p_soluble_length(const Group& g, std::size_t p,
                                        const CalculusOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidPrime(p);
  if (is_p_soluble(g, p)) return 0;
  return gamma_height(fbar(p, opts), g).value();
}

/// h̃(G): height of the (Φ ⋆ F*)-series. Needs the subgroup lattice.
inline Height non_frattini_length(const Group& g, const CalculusOptions& opts = {}) {
  return gamma_height(ftilde(opts), g);
}

struct HeightReport {
  std::string group;
  std::size_t order = 0;
  Height h;         // Fitting height
  Height h_star;    // generalized Fitting height
  std::map<std::size_t, std::size_t> lambda;  // λ_p per prime
  std::optional<Height> h_tilde;              // empty above the lattice cap
  std::map<std::string, std::size_t> series_lengths;
};

inline HeightReport named_heights(const Group& g, const std::vector<std::size_t>& primes,
                                  const CalculusOptions& opts = {}) {
  HeightReport r;
  r.group = g.name();
  r.order = g.order();
  auto record = [&](const Functorial& f) {
    GammaSeries s = gamma_series(f, g);
    r.series_lengths[f.name()] = s.terms.size();
    return s.height;
  };
  r.h = record(builtin_functorial(Atom::Fit));
  r.h_star = record(builtin_functorial(Atom::Fstar, 0, opts));
  for (std::size_t p : primes) {
    if (!is_prime(p)) throw InvalidPrime(p);
    r.lambda[p] = non_p_soluble_length(g, p, opts);
  }
  if (g.order() <= opts.lattice_cap) r.h_tilde = record(ftilde(opts));
  return r;
}

// ---------------------------------------------------------------------------
// residuals

enum class ResidualClass { quasinilpotent, p_soluble, h_p, nstar_power };

/// Membership of G in the class (p: prime for p_soluble/h_p, n for nstar_power).
inline bool in_class(ResidualClass cls, const Group& g, std::size_t param,
                     const CalculusOptions& opts = {}) {
  switch (cls) {
    case ResidualClass::quasinilpotent:
      return builtin_functorial(Atom::Fstar, 0, opts)(g).order() == g.order();
    case ResidualClass::p_soluble:
      return is_p_soluble(g, param);
    case ResidualClass::h_p:
      return fbar(param, opts)(g).order() == g.order();
    case ResidualClass::nstar_power:
      return generalized_fitting_height(g, opts) <= Height(param);
  }
  return false;
}

/// G^F: intersection of all normal N with G/N in the class. Throws if the
/// intersection itself fails the class test.
inline Subgroup residual(ResidualClass cls, const Group& g, std::size_t param = 0,
                         const CalculusOptions& opts = {}) {
  if ((cls == ResidualClass::p_soluble || cls == ResidualClass::h_p) && !is_prime(param)) {
    throw InvalidPrime(param);
  }
  if (cls == ResidualClass::nstar_power && param < 1) {
    throw InvalidParameter("class power must be at least 1");
  }
  auto member = [&](const Subgroup& n) {
    if (n.order() == g.order()) return true;
    if (n.is_trivial()) return in_class(cls, g, param, opts);
    Quotient q(g, n);
    return in_class(cls, q.group(), param, opts);
  };
  ElementMask m = Subgroup::whole(g).mask();
  for (const auto& n : normal_subgroups(g)) {
    if (!m.is_subset_of(n.mask()) && member(n)) m &= n.mask();
  }
  Subgroup r = Subgroup::from_mask(g, std::move(m));
  if (!member(r)) throw Error("residual quotient is not in the class");
  return r;
}

// ---------------------------------------------------------------------------
// property checks

enum class Property { F1, F2, F3 };

inline const char* property_name(Property p) {
  switch (p) {
    case Property::F1: return "F1";
    case Property::F2: return "F2";
    case Property::F3: return "F3";
  }
  return "?";
}

struct PropertyVerdict {
  bool pass = true;
  std::optional<Subgroup> witness;  // the normal subgroup N violating the inclusion
  std::string detail;
};

/// Checks one property of γ on G against every normal subgroup N. F1 uses the
/// natural epimorphisms G → G/N.
inline PropertyVerdict check_property(Property prop, const Functorial& gamma, const Group& g) {
  PropertyVerdict v;
  const Subgroup value = gamma(g);
  for (const auto& n : normal_subgroups(g)) {
    bool ok = true;
    std::string what;
    switch (prop) {
      case Property::F1: {
        if (n.is_trivial()) continue;
        Quotient q(g, n);
        ok = q.image(value).is_subgroup_of(gamma(q.group()));
        what = "f(γ(G)) ⊄ γ(G/N)";
        break;
      }
      case Property::F2: {
        InducedGroup sub(n);
        ok = sub.lift(gamma(sub.group())).is_subgroup_of(value);
        what = "γ(N) ⊄ γ(G)";
        break;
      }
      case Property::F3: {
        InducedGroup sub(n);
        Subgroup inside = sub.lift(gamma(sub.group()));
        ok = (value.mask() & n.mask()).is_subset_of(inside.mask());
        what = "γ(G) ∩ N ⊄ γ(N)";
        break;
      }
    }
    if (!ok) {
      v.pass = false;
      v.witness = n;
      v.detail = what + " for |N| = " + std::to_string(n.order());
      return v;
    }
  }
  return v;
}

}  // namespace fgh
