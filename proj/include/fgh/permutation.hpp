#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fgh/error.hpp"

namespace fgh {

/// A bijection of {1..degree}. Products use the right-action convention:
/// `p * q` applies `p` first, then `q`. Ordering is lexicographic on the image
/// sequence, so the identity is the least permutation of its degree.
class Permutation {
 public:
  using point_type = std::uint16_t;

  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<point_type>(i);
  }

  /// Builds from 1-based images; throws InvalidPermutation unless the images
  /// form a bijection of {1..n}.
  static Permutation from_images(std::span<const std::size_t> images) {
    if (images.size() > 0xFFFF) throw InvalidPermutation("degree too large");
    Permutation p;
    p.images_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::size_t v = images[i];
      if (v < 1 || v > images.size() || seen[v - 1]) {
        throw InvalidPermutation("image row is not a bijection of 1.." +
                                 std::to_string(images.size()));
      }
      seen[v - 1] = true;
      p.images_[i] = static_cast<point_type>(v - 1);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<std::size_t> images) {
    std::vector<std::size_t> v(images);
    return from_images(std::span<const std::size_t>(v));
  }

  /// Builds from disjoint cycles over 1-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::size_t> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = i + 1;
    std::vector<bool> touched(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        std::size_t a = cycle[k];
        std::size_t b = cycle[(k + 1) % cycle.size()];
        if (a < 1 || a > degree || b < 1 || b > degree || touched[a - 1]) {
          throw InvalidPermutation("cycles are not disjoint or out of range");
        }
        touched[a - 1] = true;
        img[a - 1] = b;
      }
    }
    return from_images(std::span<const std::size_t>(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// 1-based image of a 1-based point.
  std::size_t image(std::size_t point) const { return std::size_t{images_.at(point - 1)} + 1; }

  /// 1-based image sequence.
  std::vector<std::size_t> images() const {
    std::vector<std::size_t> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = std::size_t{images_[i]} + 1;
    return out;
  }

  /// 0-based image sequence.
  std::span<const point_type> raw() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<point_type>(i);
    return r;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
    Permutation r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  /// Places this permutation on points offset+1..offset+degree of a larger set.
  Permutation shifted(std::size_t offset, std::size_t total_degree) const {
    Permutation r(total_degree);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[offset + i] = static_cast<point_type>(offset + images_[i]);
    }
    return r;
  }

  /// Disjoint cycle notation with commas, e.g. "(1,2,3)(4,5)"; "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ',';
        out += std::to_string(j + 1);
        first = false;
        j = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (point_type v : images_) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

 private:
  std::vector<point_type> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace fgh
