#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fgh/error.hpp"
#include "fgh/group.hpp"
#include "fgh/permutation.hpp"

namespace fgh::lab {

// Group files (UTF-8 text, one directive per line):
//
//   # comment                 lines whose first non-blank character is '#'
//   degree N                  first directive, N >= 1
//   gen i1 i2 ... iN          one or more, one per generator, 1-based images
//
// Blank lines are ignored. Tokens are separated by spaces or tabs.

/// Parses a group file. Malformed lines throw ParseError carrying the 1-based
/// line number; non-bijective image rows throw InvalidPermutation.
inline GroupPtr parse_group_file(std::string_view text, std::size_t cap = kDefaultOrderCap,
                                 std::string name = "file") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword) || keyword.front() == '#') continue;
    auto number = [&](const std::string& tok) {
      std::size_t v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError(line_no, "expected a number, got '" + tok + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
        if (v > kMaxOrder) throw ParseError(line_no, "number too large: " + tok);
      }
      return v;
    };
    if (keyword == "degree") {
      if (degree != 0) throw ParseError(line_no, "duplicate degree line");
      std::string tok, extra;
      if (!(words >> tok)) throw ParseError(line_no, "missing degree");
      degree = number(tok);
      if (degree == 0) throw ParseError(line_no, "degree must be positive");
      if (words >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    } else if (keyword == "gen") {
      if (degree == 0) throw ParseError(line_no, "gen before degree");
      std::vector<std::size_t> images;
      for (std::string tok; words >> tok;) images.push_back(number(tok));
      if (images.size() != degree) {
        throw ParseError(line_no, "expected " + std::to_string(degree) + " images, got " +
                                      std::to_string(images.size()));
      }
      gens.push_back(Permutation::from_images(images));
    } else {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
  }
  if (degree == 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing degree line");
  if (gens.empty()) throw ParseError(line_no, "no gen lines");
  return Group::from_generators(degree, gens, cap, std::move(name));
}

inline GroupPtr load_group_file(const std::string& path, std::size_t cap = kDefaultOrderCap) {
  std::ifstream f(path);
  if (!f) throw InvalidParameter("cannot open group file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_group_file(buf.str(), cap, "file:" + path);
}

}  // namespace fgh::lab
