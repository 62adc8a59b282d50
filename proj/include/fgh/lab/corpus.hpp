#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgh/error.hpp"
#include "fgh/group.hpp"
#include "fgh/number.hpp"
#include "fgh/permutation.hpp"

namespace fgh::lab {

inline GroupPtr cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<std::size_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return Group::from_generators(n, gens, cap, "C" + std::to_string(n));
}

/// Symmetries of the n-gon acting on its n vertices; order 2n.
inline GroupPtr dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n < 3) throw InvalidParameter("dihedral group needs n >= 3");
  std::vector<std::size_t> rot(n), refl(n);
  for (std::size_t i = 1; i <= n; ++i) {
    rot[i - 1] = i % n + 1;
    refl[i - 1] = (n + 1 - i) % n + 1;
  }
  std::vector<Permutation> gens{Permutation::from_images(rot), Permutation::from_images(refl)};
  return Group::from_generators(n, gens, cap, "D" + std::to_string(n));
}

inline GroupPtr symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n < 1) throw InvalidParameter("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::size_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return Group::from_generators(n, gens, cap, "S" + std::to_string(n));
}

inline GroupPtr alternating(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n < 1) throw InvalidParameter("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= n; ++i) gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return Group::from_generators(n, gens, cap, "A" + std::to_string(n));
}

/// Quaternion group in its regular representation on 8 points.
inline GroupPtr quaternion8(std::size_t cap = kDefaultOrderCap) {
  // elements s*u with s in {+,-}, u in {1,i,j,k}; index = 4*sign + unit
  static constexpr std::array<std::array<int, 4>, 4> unit_sign{{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  auto mul = [](int a, int b) {
    int s = (a / 4) ^ (b / 4) ^ unit_sign[a % 4][b % 4];
    return 4 * s + unit_prod[a % 4][b % 4];
  };
  auto regular = [&](int g) {
    std::vector<std::size_t> img(8);
    for (int x = 0; x < 8; ++x) img[x] = static_cast<std::size_t>(mul(x, g)) + 1;
    return Permutation::from_images(img);
  };
  std::vector<Permutation> gens{regular(1), regular(2)};
  return Group::from_generators(8, gens, cap, "Q8");
}

namespace detail {

struct Mat2 {
  std::size_t a, b, c, d;
};

/// Generators of SL(2,q): [[1,1],[0,1]] and [[0,1],[-1,0]].
inline std::array<Mat2, 2> sl2_generators(std::size_t q) {
  return {Mat2{1, 1, 0, 1}, Mat2{0, 1, q - 1, 0}};
}

inline void require_field(std::size_t q) {
  if (!is_prime(q)) throw InvalidParameter("only prime fields are supported, got q = " + std::to_string(q));
}

}  // namespace detail

/// SL(2,q) acting on the q^2 - 1 nonzero row vectors by v -> vM.
inline GroupPtr special_linear2(std::size_t q, std::size_t cap = kDefaultOrderCap) {
  detail::require_field(q);
  auto index = [q](std::size_t x, std::size_t y) { return x * q + y; };  // 0 is the zero vector
  const std::size_t degree = q * q - 1;
  std::vector<Permutation> gens;
  for (const auto& m : detail::sl2_generators(q)) {
    std::vector<std::size_t> img(degree);
    for (std::size_t x = 0; x < q; ++x) {
      for (std::size_t y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        std::size_t nx = (x * m.a + y * m.c) % q;
        std::size_t ny = (x * m.b + y * m.d) % q;
        img[index(x, y) - 1] = index(nx, ny);
      }
    }
    gens.push_back(Permutation::from_images(img));
  }
  return Group::from_generators(degree, gens, cap, "SL(2," + std::to_string(q) + ")");
}

/// PSL(2,q) acting on the q + 1 points of the projective line.
inline GroupPtr projective_special_linear2(std::size_t q, std::size_t cap = kDefaultOrderCap) {
  detail::require_field(q);
  auto inverse = [q](std::size_t v) {
    std::size_t r = 1;
    for (std::size_t e = q - 2, b = v; e; e >>= 1, b = b * b % q) {
      if (e & 1) r = r * b % q;
    }
    return r;
  };
  // point t in [0, q) is the line through (1, t); point q is the line through (0, 1)
  auto point = [&](std::size_t x, std::size_t y) { return x == 0 ? q : y * inverse(x) % q; };
  std::vector<Permutation> gens;
  for (const auto& m : detail::sl2_generators(q)) {
    std::vector<std::size_t> img(q + 1);
    for (std::size_t t = 0; t <= q; ++t) {
      std::size_t x = t == q ? 0 : 1;
      std::size_t y = t == q ? 1 : t;
      img[t] = point((x * m.a + y * m.c) % q, (x * m.b + y * m.d) % q) + 1;
    }
    gens.push_back(Permutation::from_images(img));
  }
  return Group::from_generators(q + 1, gens, cap, "PSL(2," + std::to_string(q) + ")");
}

/// Direct product on disjoint point sets.
inline GroupPtr direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultOrderCap,
                               std::string name = {}) {
  if (!a.has_permutations() || !b.has_permutations()) {
    throw InvalidParameter("direct product needs permutation groups");
  }
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (Elem x : a.generators()) gens.push_back(a.permutation(x).shifted(0, n));
  for (Elem x : b.generators()) gens.push_back(b.permutation(x).shifted(a.degree(), n));
  if (name.empty()) name = a.name() + "x" + b.name();
  return Group::from_generators(n, gens, cap, std::move(name));
}

/// Regular wreath product A wr B: |B| copies of A's points, B permuting the
/// copies by its right regular action.
inline GroupPtr wreath_regular(const Group& a, const Group& b, std::size_t cap = kDefaultOrderCap,
                               std::string name = {}) {
  if (!a.has_permutations()) throw InvalidParameter("wreath product needs a permutation base group");
  const std::size_t d = a.degree();
  const std::size_t blocks = b.order();
  const std::size_t n = d * blocks;
  std::vector<Permutation> gens;
  for (Elem x : a.generators()) gens.push_back(a.permutation(x).shifted(0, n));
  for (Elem y : b.generators()) {
    std::vector<std::size_t> img(n);
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      std::size_t to = b.mul(static_cast<Elem>(blk), y);
      for (std::size_t i = 0; i < d; ++i) img[blk * d + i] = to * d + i + 1;
    }
    gens.push_back(Permutation::from_images(img));
  }
  if (name.empty()) name = a.name() + "wr" + b.name();
  return Group::from_generators(n, gens, cap, std::move(name));
}

// ---------------------------------------------------------------------------
// builtin names
//
//   product := wreath ("x" wreath)*
//   wreath  := atom ("wr" atom)*
//   atom    := C<n> | D<n> | S<n> | A<n> | Q8 | SL(2,<q>) | PSL(2,<q>)

namespace detail {

class NameParser {
 public:
  NameParser(std::string_view text, std::size_t cap) : s_(text), cap_(cap) {}

  /// The group and the point-set sizes of its top-level direct factors.
  std::pair<GroupPtr, std::vector<std::size_t>> parse() {
    std::vector<GroupPtr> factors{wreath()};
    while (eat("x")) factors.push_back(wreath());
    if (pos_ != s_.size()) fail("unexpected character");
    std::vector<std::size_t> degrees;
    GroupPtr g = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(*g, *factors[i], cap_);
    if (factors.size() > 1) {
      for (const auto& f : factors) degrees.push_back(f->degree());
    }
    return {std::move(g), std::move(degrees)};
  }

 private:

  GroupPtr wreath() {
    GroupPtr g = atom();
    while (eat("wr")) g = wreath_regular(*g, *atom(), cap_);
    return g;
  }

  GroupPtr atom() {
    if (eat("PSL(2,")) return projective_special_linear2(field(), cap_);
    if (eat("SL(2,")) return special_linear2(field(), cap_);
    if (eat("Q8")) return quaternion8(cap_);
    if (pos_ >= s_.size()) fail("expected a group name");
    char kind = s_[pos_++];
    switch (kind) {
      case 'C': return cyclic(number(), cap_);
      case 'D': return dihedral(number(), cap_);
      case 'S': return symmetric(number(), cap_);
      case 'A': return alternating(number(), cap_);
      default: --pos_; fail("unknown group name");
    }
  }

  std::size_t field() {
    std::size_t q = number();
    if (!eat(")")) fail("expected ')'");
    return q;
  }

  std::size_t number() {
    std::size_t start = pos_, v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
      if (v > 100000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_ + 1, what + " in group name '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace detail

struct BuiltGroup {
  GroupPtr group;
  /// Degrees of the direct factors, in point order; empty unless the name is
  /// a direct product.
  std::vector<std::size_t> factor_degrees;
};

inline BuiltGroup build_named(std::string_view name, std::size_t cap = kDefaultOrderCap) {
  auto [g, degrees] = detail::NameParser(name, cap).parse();
  return {std::move(g), std::move(degrees)};
}

/// Builds a group from a builtin name such as "S4", "C2wrC3" or "A5xC2".
inline GroupPtr build_group(std::string_view name, std::size_t cap = kDefaultOrderCap) {
  return build_named(name, cap).group;
}

// ---------------------------------------------------------------------------
// default corpus

/// Names of the base groups: C2..C12, D4..D12, S3..S6, A4..A6, Q8, SL(2,3),
/// SL(2,5), PSL(2,7).
inline std::vector<std::string> base_group_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 12; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) out.push_back("S" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) out.push_back("A" + std::to_string(n));
  out.insert(out.end(), {"Q8", "SL(2,3)", "SL(2,5)", "PSL(2,7)"});
  return out;
}

struct CorpusSpec {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = 600;
  std::vector<std::size_t> primes{2, 3, 5, 7};
};

struct CorpusEntry {
  std::string name;
  std::size_t order;
};

/// Base groups, wreath products C2wrC2, C2wrC3, C3wrC2 and every unordered
/// pair of base groups whose direct product fits under the order cap. Groups
/// are listed by name; build them with build_named.
inline std::vector<CorpusEntry> corpus_entries(const CorpusSpec& spec = {}) {
  std::vector<CorpusEntry> base;
  for (const auto& name : base_group_names()) {
    std::size_t n = build_group(name)->order();
    if (n <= spec.order_cap) base.push_back({name, n});
  }
  std::vector<CorpusEntry> out = base;
  for (const char* name : {"C2wrC2", "C2wrC3", "C3wrC2"}) {
    std::size_t n = build_group(name)->order();
    if (n <= spec.order_cap) out.push_back({name, n});
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      std::size_t n = base[i].order * base[j].order;
      if (n <= spec.order_cap) out.push_back({base[i].name + "x" + base[j].name, n});
    }
  }
  return out;
}

}  // namespace fgh::lab
