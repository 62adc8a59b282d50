#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/lattice.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh {

/// AB = BA as sets, i.e. AB is a subgroup.
inline bool permutes(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (a.is_subgroup_of(b) || b.is_subgroup_of(a)) return true;
  const Group& G = a.parent();
  if (G.order() % product_size(a, b) != 0) return false;
  if (is_normalized_by(a, b.generators()) || is_normalized_by(b, a.generators())) return true;
  // {b ∈ B : bA ⊆ AB} is closed under products, so generators of B suffice.
  ElementMask ab = set_product(a, b);
  for (Elem y : b.generators()) {
    for (Elem x : a.elements()) {
      if (!ab.test(G.mul(y, x))) return false;
    }
  }
  return true;
}

enum class FactorizationMode { all, mutually, totally };

/// A pair of subgroups that fail to permute.
struct PermutabilityWitness {
  Subgroup x;
  Subgroup y;
};

struct FactorizationRecord {
  Subgroup a;
  Subgroup b;
  bool is_product = false;
  bool mutually_permutable = false;
  bool totally_permutable = false;
  std::optional<PermutabilityWitness> witness;
};

/// Permutability with all subgroups of B reduces to its cyclic subgroups: if A
/// permutes with H and K it permutes with <H, K>.
class FactorizationSearch {
 public:
  explicit FactorizationSearch(const Group& g, std::size_t lattice_cap = kDefaultLatticeCap)
      : g_(&g),
        lattice_(&all_subgroups(g, lattice_cap)),
        cyclic_(&cyclic_subgroups(g)),
        cache_(lattice_->size() * cyclic_->size(), kUnknown),
        cyclic_lattice_index_(cyclic_->size()),
        cyclic_inside_(lattice_->size()) {
    for (std::size_t c = 0; c < cyclic_->size(); ++c) cyclic_lattice_index_[c] = index_of((*cyclic_)[c]);
  }

  const std::vector<Subgroup>& lattice() const noexcept { return *lattice_; }

  std::size_t index_of(const Subgroup& s) const {
    auto it = std::lower_bound(lattice_->begin(), lattice_->end(), s);
    if (it == lattice_->end() || !(*it == s)) throw NotSubgroup("not a subgroup of the group");
    return static_cast<std::size_t>(it - lattice_->begin());
  }

  bool is_product(std::size_t a, std::size_t b) const {
    return product_size((*lattice_)[a], (*lattice_)[b]) == g_->order();
  }

  FactorizationRecord classify(std::size_t a, std::size_t b) {
    const Subgroup& A = (*lattice_)[a];
    const Subgroup& B = (*lattice_)[b];
    FactorizationRecord r{A, B, false, false, false, std::nullopt};
    r.is_product = is_product(a, b);
    if (!r.is_product) return r;
    if (auto w = first_failure(a, b); w) {
      r.witness = std::move(w);
      return r;
    }
    if (auto w = first_failure(b, a); w) {
      r.witness = std::move(w);
      return r;
    }
    r.mutually_permutable = true;
    for (std::size_t x : cyclic_inside(a)) {
      for (std::size_t y : cyclic_inside(b)) {
        if (!permutes_cached(cyclic_lattice_index_[x], y)) {
          r.witness = PermutabilityWitness{(*cyclic_)[x], (*cyclic_)[y]};
          return r;
        }
      }
    }
    r.totally_permutable = true;
    return r;
  }

  /// All unordered pairs {A, B} (A ≤ B canonically) with AB = G matching `mode`.
  std::vector<FactorizationRecord> find(FactorizationMode mode) {
    std::vector<FactorizationRecord> out;
    const auto& L = *lattice_;
    const std::size_t n = g_->order();
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = i; j < L.size(); ++j) {
        if (L[i].order() * L[j].order() < n) continue;
        if (!is_product(i, j)) continue;
        FactorizationRecord r = classify(i, j);
        if (mode == FactorizationMode::mutually && !r.mutually_permutable) continue;
        if (mode == FactorizationMode::totally && !r.totally_permutable) continue;
        out.push_back(std::move(r));
      }
    }
    return out;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;

  /// Lattice indices of cyclic subgroups inside lattice member `s`.
  const std::vector<std::size_t>& cyclic_inside(std::size_t s) {
    auto& slot = cyclic_inside_[s];
    if (!slot) {
      slot.emplace();
      for (std::size_t c = 0; c < cyclic_->size(); ++c) {
        if ((*cyclic_)[c].is_subgroup_of((*lattice_)[s])) slot->push_back(c);
      }
    }
    return *slot;
  }

  bool permutes_cached(std::size_t s, std::size_t c) {
    std::int8_t& v = cache_[s * cyclic_->size() + c];
    if (v == kUnknown) v = permutes((*lattice_)[s], (*cyclic_)[c]) ? 1 : 0;
    return v == 1;
  }

  /// First cyclic X ≤ B not permuting with A.
  std::optional<PermutabilityWitness> first_failure(std::size_t a, std::size_t b) {
    for (std::size_t c : cyclic_inside(b)) {
      if (!permutes_cached(a, c)) return PermutabilityWitness{(*lattice_)[a], (*cyclic_)[c]};
    }
    return std::nullopt;
  }

  const Group* g_;
  const std::vector<Subgroup>* lattice_;
  const std::vector<Subgroup>* cyclic_;
  std::vector<std::int8_t> cache_;
  std::vector<std::size_t> cyclic_lattice_index_;
  std::vector<std::optional<std::vector<std::size_t>>> cyclic_inside_;
};

inline FactorizationRecord classify_factorization(const Subgroup& a, const Subgroup& b,
                                                  std::size_t lattice_cap = kDefaultLatticeCap) {
  require_same_parent(a, b);
  FactorizationSearch search(a.parent(), lattice_cap);
  return search.classify(search.index_of(a), search.index_of(b));
}

inline std::vector<FactorizationRecord> find_factorizations(
    const Group& g, FactorizationMode mode, std::size_t lattice_cap = kDefaultLatticeCap) {
  return FactorizationSearch(g, lattice_cap).find(mode);
}

}  // namespace fgh
