#pragma once

#include <charconv>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ttpk/error.hpp"

namespace ttpk::detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Next non-blank line; false at end of stream.
inline bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!trim(line).empty()) return true;
  }
  return false;
}

inline long long parse_int(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError("not an integer: '" + std::string(tok) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<long long> parse_ints(std::string_view line) {
  std::vector<long long> out;
  for (auto tok : split_ws(line)) out.push_back(parse_int(tok));
  return out;
}

// "a=1 b=2" -> {a:1, b:2}
inline std::map<std::string, long long> parse_key_values(std::string_view line) {
  std::map<std::string, long long> out;
  for (auto tok : split_ws(line)) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw FormatError("expected key=value, got '" + std::string(tok) + "'");
    }
    out[std::string(tok.substr(0, eq))] = parse_int(tok.substr(eq + 1));
  }
  return out;
}

}  // namespace ttpk::detail
