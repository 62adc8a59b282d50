#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fgh/element_mask.hpp"
#include "fgh/error.hpp"
#include "fgh/permutation.hpp"

namespace fgh {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Default cap on enumerated group order.
inline constexpr std::size_t kDefaultOrderCap = 5040;
/// Hard limit imposed by the 16-bit element index.
inline constexpr std::size_t kMaxOrder = 0xFFFF;

/// A subgroup of a Group, identified by its sorted element-index set. The
/// parent is referenced, not owned: it must outlive the subgroup.
class Subgroup {
 public:
  Subgroup() = default;

  /// Wraps an element set already known to be closed; computes generators.
  static Subgroup from_mask(const Group& parent, ElementMask mask);
  /// Wraps an element set with known generators.
  static Subgroup from_parts(const Group& parent, ElementMask mask, std::vector<Elem> generators);

  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  const Group& parent() const noexcept { return *parent_; }
  const Group* parent_ptr() const noexcept { return parent_; }

  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool contains(Elem g) const noexcept { return mask_.test(g); }

  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const ElementMask& mask() const noexcept { return mask_; }

  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return order() <= other.order() && mask_.is_subset_of(other.mask_);
  }

  /// Generators rendered in cycle notation, e.g. "<(1,2),(1,2,3)>".
  std::string key_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

  /// Canonical order: by order, then lexicographically by element indices.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  const Group* parent_ = nullptr;
  std::vector<Elem> elements_;
  ElementMask mask_;
  std::vector<Elem> generators_;
};

/// A finite group held as a Cayley table over canonically ordered element
/// indices (index 0 is the identity). Groups built from permutations keep the
/// permutations, sorted lexicographically; derived groups (quotients) realise
/// their elements through the right regular representation on demand.
/// Immutable after construction; derived data is memoised thread-safely.
class Group {
  struct Token {};

 public:
  /// Enumerates the closure of `gens` on `degree` points.
  static GroupPtr from_generators(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t cap = kDefaultOrderCap, std::string name = {});

  /// Builds from a complete multiplication table (row-major, order*order).
  /// `perms`, when non-empty, gives a faithful permutation per element.
  static GroupPtr from_table(std::size_t order, std::vector<Elem> table,
                             std::vector<Elem> generators, std::string name,
                             std::vector<Permutation> perms = {});

  Group(Token, std::size_t order, std::vector<Elem> table, std::vector<Elem> generators,
        std::string name, std::vector<Permutation> perms);

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  std::size_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  const std::string& name() const noexcept { return name_; }

  /// Permutation degree; the order itself for table-only groups.
  std::size_t degree() const noexcept { return perms_.empty() ? order_ : perms_.front().degree(); }
  bool has_permutations() const noexcept { return !perms_.empty(); }

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inverse_[g], x), g); }
  /// [a,b] = a^-1 b^-1 a b.
  Elem comm(Elem a, Elem b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  Elem power(Elem a, std::size_t k) const noexcept {
    Elem r = identity();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  std::size_t element_order(Elem a) const noexcept {
    std::size_t k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  const std::vector<Elem>& generators() const noexcept { return generators_; }

  Permutation permutation(Elem a) const;

  /// Element with the given permutation, if present.
  std::optional<Elem> find(const Permutation& p) const;

  /// Conjugacy classes, each sorted, ordered by least element.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const;

  /// Memoises `compute()` under `key`; concurrent callers observe one value.
  template <typename T, typename F>
  const T& memo(const std::string& key, F&& compute) const {
    {
      std::lock_guard lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return *static_cast<const T*>(it->second.get());
    }
    auto value = std::make_shared<const T>(compute());
    std::lock_guard lock(memo_mutex_);
    auto [it, inserted] = memo_.try_emplace(key, std::move(value));
    return *static_cast<const T*>(it->second.get());
  }

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::string name_;
  std::vector<Permutation> perms_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const void>> memo_;
};

// ---------------------------------------------------------------------------
// closure primitives

/// Incrementally maintained closed subset of a group.
class Closure {
 public:
  explicit Closure(const Group& g) : g_(&g), mask_(g.order()) {
    mask_.set(Group::identity());
    elements_.push_back(Group::identity());
  }

  Closure(const Group& g, const Subgroup& start)
      : g_(&g), mask_(start.mask()), elements_(start.elements()), gens_(start.generators()) {}

  bool contains(Elem x) const noexcept { return mask_.test(x); }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Adds a generator; returns false if it was already inside.
  bool add(Elem s) {
    if (mask_.test(s)) return false;
    gens_.push_back(s);
    std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i) push(g_->mul(elements_[i], s));
    for (std::size_t i = old; i < elements_.size(); ++i) {
      for (Elem t : gens_) push(g_->mul(elements_[i], t));
    }
    return true;
  }

  Subgroup finish() && { return Subgroup::from_parts(*g_, std::move(mask_), std::move(gens_)); }

  const ElementMask& mask() const noexcept { return mask_; }

 private:
  void push(Elem y) {
    if (!mask_.test(y)) {
      mask_.set(y);
      elements_.push_back(y);
    }
  }

  const Group* g_;
  ElementMask mask_;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
};

/// Subgroup generated by `gens`.
inline Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  Closure c(g);
  for (Elem s : gens) c.add(s);
  return std::move(c).finish();
}

// ---------------------------------------------------------------------------
// Subgroup implementation

inline Subgroup Subgroup::from_parts(const Group& parent, ElementMask mask,
                                     std::vector<Elem> generators) {
  Subgroup s;
  s.parent_ = &parent;
  s.elements_ = mask.elements();
  s.mask_ = std::move(mask);
  std::erase(generators, Group::identity());
  s.generators_ = std::move(generators);
  return s;
}

inline Subgroup Subgroup::from_mask(const Group& parent, ElementMask mask) {
  Closure c(parent);
  std::vector<Elem> elems = mask.elements();
  // Prefer high-order elements so generating sets stay short.
  std::vector<std::pair<std::size_t, Elem>> by_order;
  by_order.reserve(elems.size());
  for (Elem x : elems) by_order.emplace_back(parent.element_order(x), x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Elem> gens;
  for (auto [ord, x] : by_order) {
    if (c.size() == elems.size()) break;
    if (c.add(x)) gens.push_back(x);
  }
  return from_parts(parent, std::move(mask), std::move(gens));
}

inline Subgroup Subgroup::trivial(const Group& parent) {
  ElementMask m(parent.order());
  m.set(Group::identity());
  return from_parts(parent, std::move(m), {});
}

inline Subgroup Subgroup::whole(const Group& parent) {
  ElementMask m(parent.order());
  for (std::size_t i = 0; i < parent.order(); ++i) m.set(i);
  return from_parts(parent, std::move(m), parent.generators());
}

inline std::string Subgroup::key_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += parent_->permutation(generators_[i]).cycle_string();
  }
  return out + ">";
}

/// Subgroup generated by permutations that must all lie in `g`.
inline Subgroup subgroup_of(const Group& g, std::span<const Permutation> gens) {
  std::vector<Elem> idx;
  for (const auto& p : gens) {
    auto e = g.find(p);
    if (!e) throw NotSubgroup(p.cycle_string() + " is not an element of " + g.name());
    idx.push_back(*e);
  }
  return generated_subgroup(g, idx);
}

inline Subgroup subgroup_of(const Group& g, std::initializer_list<Permutation> gens) {
  return subgroup_of(g, std::span<const Permutation>(gens.begin(), gens.size()));
}

// ---------------------------------------------------------------------------
// Group implementation

inline Group::Group(Token, std::size_t order, std::vector<Elem> table,
                    std::vector<Elem> generators, std::string name,
                    std::vector<Permutation> perms)
    : order_(order),
      table_(std::move(table)),
      inverse_(order),
      generators_(std::move(generators)),
      name_(std::move(name)),
      perms_(std::move(perms)) {
  for (std::size_t a = 0; a < order_; ++a) {
    const Elem* row = &table_[a * order_];
    for (std::size_t b = 0; b < order_; ++b) {
      if (row[b] == identity()) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  std::erase(generators_, identity());
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

inline GroupPtr Group::from_table(std::size_t order, std::vector<Elem> table,
                                  std::vector<Elem> generators, std::string name,
                                  std::vector<Permutation> perms) {
  if (order == 0 || order > kMaxOrder) throw InvalidParameter("invalid group order");
  if (table.size() != order * order) throw InvalidParameter("table size mismatch");
  return std::make_shared<const Group>(Token{}, order, std::move(table), std::move(generators),
                                       std::move(name), std::move(perms));
}

inline GroupPtr Group::from_generators(std::size_t degree, std::span<const Permutation> gens,
                                       std::size_t cap, std::string name) {
  if (cap < 1) throw InvalidParameter("order cap must be positive");
  cap = std::min(cap, kMaxOrder);
  for (const auto& s : gens) {
    if (s.degree() != degree) throw DegreeMismatch(degree, s.degree());
  }
  std::vector<Permutation> distinct_gens;
  for (const auto& s : gens) {
    if (!s.is_identity() &&
        std::find(distinct_gens.begin(), distinct_gens.end(), s) == distinct_gens.end()) {
      distinct_gens.push_back(s);
    }
  }
  const std::size_t ngens = distinct_gens.size();

  // Breadth-first enumeration; discovery order doubles as a spanning tree.
  std::vector<Permutation> found{Permutation(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{found[0], 0}};
  std::vector<std::size_t> tree_parent{0};
  std::vector<std::size_t> tree_gen{0};
  std::vector<std::size_t> right_mul;  // found.size() * ngens
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t k = 0; k < ngens; ++k) {
      Permutation y = found[i] * distinct_gens[k];
      auto it = index.find(y);
      if (it == index.end()) {
        if (found.size() >= cap) throw OrderCapExceeded(cap, found.size() + 1);
        it = index.emplace(y, found.size()).first;
        found.push_back(std::move(y));
        tree_parent.push_back(i);
        tree_gen.push_back(k);
      }
      right_mul.push_back(it->second);
    }
  }
  const std::size_t n = found.size();

  // Canonical order: lexicographic on image sequences.
  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
  std::sort(by_rank.begin(), by_rank.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<Elem> canon(n);
  for (std::size_t r = 0; r < n; ++r) canon[by_rank[r]] = static_cast<Elem>(r);

  // Row x of the table follows the spanning tree: x*y = (x*parent(y))*gen(y).
  std::vector<Elem> table(n * n);
  std::vector<std::size_t> row(n);
  for (std::size_t x = 0; x < n; ++x) {
    row[0] = x;
    for (std::size_t y = 1; y < n; ++y) {
      row[y] = right_mul[row[tree_parent[y]] * ngens + tree_gen[y]];
    }
    Elem* out = &table[std::size_t{canon[x]} * n];
    for (std::size_t y = 0; y < n; ++y) out[canon[y]] = canon[row[y]];
  }

  std::vector<Elem> gen_idx;
  for (const auto& s : distinct_gens) gen_idx.push_back(canon[index.at(s)]);
  std::vector<Permutation> perms(n);
  for (std::size_t i = 0; i < n; ++i) perms[canon[i]] = std::move(found[i]);
  return from_table(n, std::move(table), std::move(gen_idx), std::move(name), std::move(perms));
}

inline Permutation Group::permutation(Elem a) const {
  if (!perms_.empty()) return perms_[a];
  std::vector<std::size_t> img(order_);
  for (std::size_t j = 0; j < order_; ++j) img[j] = std::size_t{mul(static_cast<Elem>(j), a)} + 1;
  return Permutation::from_images(std::span<const std::size_t>(img));
}

inline std::optional<Elem> Group::find(const Permutation& p) const {
  if (!perms_.empty()) {
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || !(*it == p)) return std::nullopt;
    return static_cast<Elem>(it - perms_.begin());
  }
  for (std::size_t x = 0; x < order_; ++x) {
    if (permutation(static_cast<Elem>(x)) == p) return static_cast<Elem>(x);
  }
  return std::nullopt;
}

inline const std::vector<std::vector<Elem>>& Group::conjugacy_classes() const {
  return memo<std::vector<std::vector<Elem>>>("classes", [this] {
    std::vector<std::vector<Elem>> classes;
    std::vector<bool> seen(order_, false);
    for (std::size_t x = 0; x < order_; ++x) {
      if (seen[x]) continue;
      std::vector<Elem> cls{static_cast<Elem>(x)};
      seen[x] = true;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (Elem s : generators_) {
          Elem y = conj(cls[i], s);
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  });
}

}  // namespace fgh
