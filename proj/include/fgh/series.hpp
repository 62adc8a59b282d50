#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "fgh/functorial.hpp"
#include "fgh/group.hpp"
#include "fgh/quotient.hpp"

namespace fgh {

/// A γ-height: a natural number or Unbounded (the series stalls below G).
/// Unbounded is absorbing for max and addition and compares above every
/// finite height.
class Height {
 public:
  constexpr Height() = default;
  constexpr explicit Height(std::size_t v) : value_(v) {}
  static constexpr Height unbounded() { return Height(kUnbounded); }

  constexpr bool is_finite() const noexcept { return value_ != kUnbounded; }
  std::size_t value() const {
    if (!is_finite()) throw Error("height is unbounded");
    return value_;
  }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

  friend constexpr bool operator==(Height, Height) = default;
  friend constexpr auto operator<=>(Height a, Height b) { return a.value_ <=> b.value_; }

  friend constexpr Height operator+(Height a, Height b) {
    if (!a.is_finite() || !b.is_finite()) return unbounded();
    return Height(a.value_ + b.value_);
  }
  /// Subtracts a natural number from a finite height (floored at zero).
  friend constexpr Height operator-(Height a, std::size_t k) {
    if (!a.is_finite()) return a;
    return Height(a.value_ >= k ? a.value_ - k : 0);
  }
  friend constexpr Height max(Height a, Height b) { return a < b ? b : a; }

 private:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = 0;
};

struct GammaSeries {
  std::string functorial;
  std::vector<Subgroup> terms;  // terms[0] = 1, strictly ascending
  bool complete = false;        // terms.back() = G
  Height height;
};

inline constexpr std::size_t kDefaultMaxSteps = 64;

/// γ_(0) = 1, γ_(i+1) = preimage of γ(G/γ_(i)). Stops at G (height = index)
/// or at the first repeated proper term (height Unbounded).
inline GammaSeries gamma_series(const Functorial& gamma, const Group& g,
                                std::size_t max_steps = kDefaultMaxSteps) {
  if (max_steps < 1) throw InvalidParameter("max_steps must be at least 1");
  GammaSeries s;
  s.functorial = gamma.name();
  s.terms.push_back(Subgroup::trivial(g));
  if (g.is_trivial()) {
    s.complete = true;
    s.height = Height(0);
    return s;
  }
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const Subgroup& last = s.terms.back();
    Subgroup next = last.is_trivial() ? gamma(g) : [&] {
      Quotient q(g, last);
      return q.preimage(gamma(q.group()));
    }();
    if (next.order() == g.order()) {
      s.terms.push_back(std::move(next));
      s.complete = true;
      s.height = Height(step);
      return s;
    }
    if (next.order() == last.order()) {
      s.height = Height::unbounded();
      return s;
    }
    s.terms.push_back(std::move(next));
  }
  throw StepBudgetExceeded("γ-series did not complete or stall within " +
                           std::to_string(max_steps) + " steps");
}

/// h_γ(G), memoised on G.
inline Height gamma_height(const Functorial& gamma, const Group& g) {
  return g.memo<Height>("height:" + gamma.name(),
                        [&] { return gamma_series(gamma, g).height; });
}

}  // namespace fgh
