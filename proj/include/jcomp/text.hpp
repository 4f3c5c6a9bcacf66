#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace jcomp::text {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// ASCII case fold; the join key for journal titles.
inline std::string fold(std::string_view s) {
  std::string out(trim(s));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  return out;
}

inline bool iequal(std::string_view a, std::string_view b) { return fold(a) == fold(b); }

inline std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

struct Line {
  std::size_t number;  // 1-based
  std::string_view content;
};

// Splits on LF, drops a trailing CR per line, strips a UTF-8 BOM and
// skips blank lines while keeping the original line numbers.
inline std::vector<Line> lines(std::string_view s) {
  if (s.starts_with("\xEF\xBB\xBF")) s.remove_prefix(3);
  std::vector<Line> out;
  std::size_t number = 0;
  for (auto raw : split(s, '\n')) {
    ++number;
    if (raw.ends_with('\r')) raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    out.push_back({number, raw});
  }
  return out;
}

// Fixed-point rendering with the given number of decimals.
inline std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace jcomp::text
