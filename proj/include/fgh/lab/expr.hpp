#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgh/error.hpp"
#include "fgh/functorial.hpp"

namespace fgh::lab {

// Functorial expressions:
//
//   expr := atom ("*" atom)*
//   atom := Z | Fit | Soc | Phi | Fstar | Rsol | Rp[<prime>] | Op[<prime>]
//
// "*" is the upper product, left-associative, left operand applied first:
// "Rp[2]*Fstar*Rp[2]" is (R_2 ⋆ F*) ⋆ R_2. Spaces between tokens are allowed.

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const CalculusOptions& opts) : s_(text), opts_(opts) {}

  Functorial parse() {
    skip_space();
    Functorial f = atom();
    skip_space();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip_space();
      f = star(f, atom());
      skip_space();
    }
    if (pos_ != s_.size()) fail(pos_, "expected '*' or end of expression");
    return f;
  }

 private:
  Functorial atom() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    if (word.empty()) fail(start, "expected a functorial name");
    if (word == "Z") return builtin_functorial(Atom::Z, 0, opts_);
    if (word == "Fit") return builtin_functorial(Atom::Fit, 0, opts_);
    if (word == "Soc") return builtin_functorial(Atom::Soc, 0, opts_);
    if (word == "Phi") return builtin_functorial(Atom::Phi, 0, opts_);
    if (word == "Fstar") return builtin_functorial(Atom::Fstar, 0, opts_);
    if (word == "Rsol") return builtin_functorial(Atom::Rsol, 0, opts_);
    if (word == "Rp") return builtin_functorial(Atom::Rp, prime(), opts_);
    if (word == "Op") return builtin_functorial(Atom::Op, prime(), opts_);
    fail(start, "unknown functorial '" + std::string(word) + "'");
  }

  std::size_t prime() {
    if (pos_ >= s_.size() || s_[pos_] != '[') fail(pos_, "expected '[' after prime-indexed functorial");
    ++pos_;
    const std::size_t start = pos_;
    std::size_t p = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      p = p * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
      if (p > 1000000) fail(start, "prime too large");
    }
    if (pos_ == start) fail(pos_, "expected a prime");
    if (!is_prime(p)) fail(start, std::to_string(p) + " is not a prime");
    if (pos_ >= s_.size() || s_[pos_] != ']') fail(pos_, "expected ']'");
    ++pos_;
    return p;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw ParseError(at + 1, what);
  }

  std::string_view s_;
  CalculusOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a functorial expression. Errors carry the 1-based column.
inline Functorial parse_functorial_expr(std::string_view text, const CalculusOptions& opts = {}) {
  return detail::ExprParser(text, opts).parse();
}

}  // namespace fgh::lab
