#pragma once

#include <limits>
#include <string>
#include <vector>

#include "fgh/group.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh {

/// A subgroup realised as a group in its own right, with the embedding back
/// into its parent. Element order follows the parent's canonical order.
class InducedGroup {
 public:
  explicit InducedGroup(const Subgroup& h, std::string name = {})
      : parent_(&h.parent()), to_parent_(h.elements()) {
    const Group& G = *parent_;
    const std::size_t m = to_parent_.size();
    from_parent_.assign(G.order(), kAbsent);
    for (std::size_t i = 0; i < m; ++i) from_parent_[to_parent_[i]] = static_cast<Elem>(i);
    std::vector<Elem> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = from_parent_[G.mul(to_parent_[i], to_parent_[j])];
      }
    }
    std::vector<Elem> gens;
    for (Elem s : h.generators()) gens.push_back(from_parent_[s]);
    std::vector<Permutation> perms;
    if (G.has_permutations()) {
      perms.reserve(m);
      for (Elem x : to_parent_) perms.push_back(G.permutation(x));
    }
    if (name.empty()) name = G.name() + "[" + std::to_string(m) + "]";
    group_ = Group::from_table(m, std::move(table), std::move(gens), std::move(name),
                               std::move(perms));
  }

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Group& parent() const noexcept { return *parent_; }

  Elem to_parent(Elem x) const noexcept { return to_parent_[x]; }

  /// Image in the parent of a subgroup of the induced group.
  Subgroup lift(const Subgroup& x) const {
    ElementMask m(parent_->order());
    for (Elem e : x.elements()) m.set(to_parent_[e]);
    std::vector<Elem> gens;
    for (Elem s : x.generators()) gens.push_back(to_parent_[s]);
    return Subgroup::from_parts(*parent_, std::move(m), std::move(gens));
  }

  /// H ∩ (this subgroup), as a subgroup of the induced group.
  Subgroup restrict(const Subgroup& h) const {
    ElementMask m(group_->order());
    for (Elem e : h.elements()) {
      if (from_parent_[e] != kAbsent) m.set(from_parent_[e]);
    }
    return Subgroup::from_mask(*group_, std::move(m));
  }

 private:
  static constexpr Elem kAbsent = std::numeric_limits<Elem>::max();

  const Group* parent_;
  std::vector<Elem> to_parent_;
  std::vector<Elem> from_parent_;
  GroupPtr group_;
};

/// G/N with the natural epimorphism. Cosets are represented by their least
/// element; quotient elements are ordered by representative.
class Quotient {
 public:
  Quotient(const Group& parent, const Subgroup& kernel, std::string name = {})
      : parent_(&parent), kernel_(kernel) {
    if (kernel.parent_ptr() != &parent) throw InvalidParameter("kernel from another group");
    if (!is_normal(kernel)) throw NotNormal("kernel is not normal");
    const std::size_t n = parent.order();
    coset_.assign(n, kUnset);
    for (std::size_t g = 0; g < n; ++g) {
      if (coset_[g] != kUnset) continue;
      const Elem id = static_cast<Elem>(reps_.size());
      reps_.push_back(static_cast<Elem>(g));
      for (Elem k : kernel.elements()) coset_[parent.mul(static_cast<Elem>(g), k)] = id;
    }
    const std::size_t q = reps_.size();
    std::vector<Elem> table(q * q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset_[parent.mul(reps_[i], reps_[j])];
    }
    std::vector<Elem> gens;
    for (Elem s : parent.generators()) gens.push_back(coset_[s]);
    if (name.empty()) name = parent.name() + "/" + std::to_string(kernel.order());
    group_ = Group::from_table(q, std::move(table), std::move(gens), std::move(name));
  }

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Group& parent() const noexcept { return *parent_; }
  const Subgroup& kernel() const noexcept { return kernel_; }

  /// Natural epimorphism on elements.
  Elem image(Elem g) const noexcept { return coset_[g]; }
  /// Canonical (least) coset representative.
  Elem representative(Elem q) const noexcept { return reps_[q]; }

  /// HN/N.
  Subgroup image(const Subgroup& h) const {
    ElementMask m(group_->order());
    for (Elem e : h.elements()) m.set(coset_[e]);
    std::vector<Elem> gens;
    for (Elem s : h.generators()) gens.push_back(coset_[s]);
    return Subgroup::from_parts(*group_, std::move(m), std::move(gens));
  }

  /// Full preimage of a subgroup of G/N.
  Subgroup preimage(const Subgroup& x) const {
    ElementMask m(parent_->order());
    for (std::size_t g = 0; g < parent_->order(); ++g) {
      if (x.contains(coset_[g])) m.set(g);
    }
    std::vector<Elem> gens(kernel_.generators());
    for (Elem s : x.generators()) gens.push_back(reps_[s]);
    return Subgroup::from_parts(*parent_, std::move(m), std::move(gens));
  }

 private:
  static constexpr Elem kUnset = std::numeric_limits<Elem>::max();

  const Group* parent_;
  Subgroup kernel_;
  std::vector<Elem> coset_;
  std::vector<Elem> reps_;
  GroupPtr group_;
};

/// The section H/K (K ⊴ H, both subgroups of one group) as a group.
struct Section {
  explicit Section(const Subgroup& h, const Subgroup& k)
      : upper(h), lower_in_upper(upper.restrict(k)), quotient(upper.group(), lower_in_upper) {}

  InducedGroup upper;
  Subgroup lower_in_upper;
  Quotient quotient;

  const Group& group() const noexcept { return quotient.group(); }
};

}  // namespace fgh
