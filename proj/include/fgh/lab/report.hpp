#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "fgh/error.hpp"

namespace fgh::lab {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// key=value pairs joined by ';', in insertion order.
class Detail {
 public:
  template <typename T>
  Detail& add(const std::string& key, const T& value) {
    if constexpr (std::is_arithmetic_v<T>) {
      return add(key, std::to_string(value));
    } else {
      if (!text_.empty()) text_ += ';';
      text_ += key;
      text_ += '=';
      for (char c : std::string(value)) text_ += (c == ';' || c == '\n' || c == '\r') ? ' ' : c;
      return *this;
    }
  }
  Detail& append(const Detail& other) {
    if (!text_.empty() && !other.text_.empty()) text_ += ';';
    text_ += other.text_;
    return *this;
  }
  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
};

struct Verdict {
  std::string theorem;
  std::string group;
  Status status = Status::pass;
  std::string detail;
};

inline bool verdict_less(const Verdict& a, const Verdict& b) {
  return std::tie(a.theorem, a.group) < std::tie(b.theorem, b.group);
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

inline Tally tally(const std::vector<Verdict>& verdicts) {
  Tally t;
  for (const auto& v : verdicts) {
    switch (v.status) {
      case Status::pass: ++t.pass; break;
      case Status::fail: ++t.fail; break;
      case Status::skipped: ++t.skipped; break;
    }
  }
  return t;
}

/// One line per verdict, sorted by (theorem, group), then a summary line.
inline void emit_report(std::vector<Verdict> verdicts, std::ostream& out) {
  std::stable_sort(verdicts.begin(), verdicts.end(), verdict_less);
  for (const auto& v : verdicts) {
    out << "THEOREM " << v.theorem << " GROUP " << v.group << " STATUS " << status_name(v.status)
        << " DETAIL " << v.detail << '\n';
  }
  Tally t = tally(verdicts);
  out << t.pass << " pass / " << t.fail << " fail / " << t.skipped << " skipped\n";
  if (!out) throw Error("failed to write report");
}

/// Parses the DETAIL field back into a map.
inline std::map<std::string, std::string> parse_detail(const std::string& detail) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < detail.size()) {
    std::size_t end = detail.find(';', start);
    if (end == std::string::npos) end = detail.size();
    std::string item = detail.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq != std::string::npos) out[item.substr(0, eq)] = item.substr(eq + 1);
    start = end + 1;
  }
  return out;
}

}  // namespace fgh::lab
