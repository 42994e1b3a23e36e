//
// wrc - right ideals and right congruences of semigroups
//
// String helpers shared by element parsers, the construction language and
// the report writers.
//

#ifndef WRC_TEXT_HPP_
#define WRC_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"

namespace wrc::text {

  inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'
                          || s.front() == '\n' || s.front() == '\r')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'
                          || s.back() == '\n' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  }

  inline std::string_view unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
      s = s.substr(1, s.size() - 2);
    }
    return s;
  }

  // Splits at occurrences of sep that are not nested inside (), [] or "".
  inline std::vector<std::string_view> split_top(std::string_view s,
                                                 char             sep) {
    std::vector<std::string_view> out;
    int                           depth = 0;
    bool                          quote = false;
    std::size_t                   start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == '"') {
        quote = !quote;
      } else if (quote) {
        continue;
      } else if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        --depth;
      } else if (c == sep && depth == 0) {
        out.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    }
    out.push_back(s.substr(start));
    return out;
  }

  inline std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) {
      throw Error("expected an integer, found nothing");
    }
    std::int64_t v   = 0;
    bool         neg = false;
    std::size_t  i   = 0;
    if (s[0] == '-') {
      neg = true;
      i   = 1;
    }
    if (i == s.size()) {
      throw Error("expected an integer, found '" + std::string(s) + "'");
    }
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error("expected an integer, found '" + std::string(s) + "'");
      }
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  }

  inline std::string join(std::vector<std::string> const& xs,
                          std::string_view                sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i != 0) {
        out += sep;
      }
      out += xs[i];
    }
    return out;
  }

}  // namespace wrc::text

#endif  // WRC_TEXT_HPP_
