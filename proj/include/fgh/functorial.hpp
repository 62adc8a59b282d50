#pragma once

#include <functional>
#include <string>
#include <utility>

#include "fgh/group.hpp"
#include "fgh/lattice.hpp"
#include "fgh/number.hpp"
#include "fgh/quotient.hpp"
#include "fgh/radicals.hpp"

namespace fgh {

/// Declared closure properties of a functorial:
///   F1  f(γ(G)) ⊆ γ(f(G)) for every epimorphism f,
///   F2  γ(N) ⊆ γ(G) for N ⊴ G,
///   F3  γ(G) ∩ N ⊆ γ(N) for N ⊴ G.
struct PropertyFlags {
  bool f1 = false;
  bool f2 = false;
  bool f3 = false;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// A map assigning to every group a characteristic subgroup. Values are
/// memoised on the group under the functorial's name, so names must identify
/// the evaluator uniquely.
class Functorial {
 public:
  using Evaluator = std::function<Subgroup(const Group&)>;

  Functorial(std::string name, PropertyFlags flags, bool guarantees_progress, Evaluator eval)
      : name_(std::move(name)),
        flags_(flags),
        progress_(guarantees_progress),
        eval_(std::move(eval)) {}

  const std::string& name() const noexcept { return name_; }
  PropertyFlags flags() const noexcept { return flags_; }
  /// γ(H) > 1 for every nontrivial H.
  bool guarantees_progress() const noexcept { return progress_; }

  Subgroup operator()(const Group& g) const {
    return g.memo<Subgroup>("fn:" + name_, [&] { return eval_(g); });
  }

 private:
  std::string name_;
  PropertyFlags flags_;
  bool progress_;
  Evaluator eval_;
};

/// Options shared by the builtin functorials.
struct CalculusOptions {
  std::size_t lattice_cap = kDefaultLatticeCap;
  InneriserMode inneriser = InneriserMode::standard;
};

enum class Atom { Z, Fit, Op, Soc, Rsol, Rp, Phi, Fstar };

inline Functorial builtin_functorial(Atom atom, std::size_t p = 0, const CalculusOptions& opts = {}) {
  const bool needs_prime = atom == Atom::Op || atom == Atom::Rp;
  if (needs_prime && !is_prime(p)) throw InvalidPrime(p);
  const std::string suffix = "[" + std::to_string(p) + "]";
  switch (atom) {
    case Atom::Z:
      return {"Z", {true, false, true}, false, [](const Group& g) { return center(g); }};
    case Atom::Fit:
      return {"Fit", {true, true, true}, false, [](const Group& g) { return fitting(g); }};
    case Atom::Op:
      return {"Op" + suffix, {true, true, true}, false,
              [p](const Group& g) { return p_core(g, p); }};
    case Atom::Soc:
      return {"Soc", {true, false, true}, true, [](const Group& g) { return socle(g); }};
    case Atom::Rsol:
      return {"Rsol", {true, true, true}, false,
              [](const Group& g) { return soluble_radical(g); }};
    case Atom::Rp:
      return {"Rp" + suffix, {true, true, true}, false,
              [p](const Group& g) { return p_soluble_radical(g, p); }};
    case Atom::Phi: {
      const std::size_t cap = opts.lattice_cap;
      return {"Phi", {true, true, false}, false,
              [cap](const Group& g) { return frattini(g, cap); }};
    }
    case Atom::Fstar: {
      const InneriserMode mode = opts.inneriser;
      return {mode == InneriserMode::standard ? "Fstar" : "Fstar~corrupt",
              {true, true, true}, true,
              [mode](const Group& g) { return generalized_fitting(g, mode); }};
    }
  }
  throw InvalidParameter("unknown atom");
}

/// γ(G) = G.
inline Functorial identity_functorial() {
  return {"1G", {true, true, true}, true, [](const Group& g) { return Subgroup::whole(g); }};
}

/// γ(G) = 1.
inline Functorial trivial_functorial() {
  return {"1", {true, true, true}, false, [](const Group& g) { return Subgroup::trivial(g); }};
}

/// Upper product: (γ2 ⋆ γ1)(G)/γ2(G) = γ1(G/γ2(G)). γ2 is applied first.
/// Declared flags are those preserved by the product: F1 and F2 when both
/// factors carry them, F3 additionally when both carry all three.
inline Functorial star(const Functorial& first, const Functorial& second) {
  const PropertyFlags a = first.flags();
  const PropertyFlags b = second.flags();
  PropertyFlags f;
  f.f1 = f.f2 = a.f1 && a.f2 && b.f1 && b.f2;
  f.f3 = f.f1 && a.f3 && b.f3;
  return {first.name() + "*" + second.name(), f,
          first.guarantees_progress() || second.guarantees_progress(),
          [first, second](const Group& g) {
            Subgroup n = first(g);
            if (n.is_trivial()) return second(g);
            if (n.order() == g.order()) return n;
            Quotient q(g, n);
            return q.preimage(second(q.group()));
          }};
}

/// F̄_p = R_p ⋆ F* ⋆ R_p.
inline Functorial fbar(std::size_t p, const CalculusOptions& opts = {}) {
  Functorial rp = builtin_functorial(Atom::Rp, p, opts);
  return star(star(rp, builtin_functorial(Atom::Fstar, 0, opts)), rp);
}

/// F̃ = Φ ⋆ F*.
inline Functorial ftilde(const CalculusOptions& opts = {}) {
  return star(builtin_functorial(Atom::Phi, 0, opts), builtin_functorial(Atom::Fstar, 0, opts));
}

}  // namespace fgh
