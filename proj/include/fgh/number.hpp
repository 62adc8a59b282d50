#pragma once

#include <cstddef>
#include <vector>

namespace fgh {

inline bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::size_t smallest_prime_factor(std::size_t n) noexcept {
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

/// π(n): the distinct prime divisors, ascending.
inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime_power_of(std::size_t n, std::size_t p) noexcept {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime_power(std::size_t n) noexcept {
  return n > 1 && is_prime_power_of(n, smallest_prime_factor(n));
}

}  // namespace fgh
