#pragma once

#include "rsched/error.hpp"
#include "rsched/rational.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace rsched::detail {

struct Line {
  std::size_t number = 0;
  bool comment = false;
  std::vector<std::string_view> tokens;  // for comments: the words after '#'
  std::string_view body;                 // for comments: text after "# "
};

inline std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-blank lines. A record line is cut at the first token starting with '#'.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    ++number;
    auto tokens = split_ws(raw);
    if (!tokens.empty()) {
      Line line;
      line.number = number;
      if (tokens.front().front() == '#') {
        line.comment = true;
        auto rest = raw.substr(raw.find('#') + 1);
        if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
        line.body = rest;
        line.tokens = split_ws(rest);
      } else {
        for (std::size_t k = 0; k < tokens.size(); ++k) {
          if (tokens[k].front() == '#') {
            tokens.resize(k);
            break;
          }
        }
        line.tokens = std::move(tokens);
      }
      lines.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line) {
  Int value{};
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

inline Rational parse_rational(std::string_view token, std::size_t line) {
  try {
    return Rational::parse(token);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

inline void expect(bool ok, std::size_t line, const std::string& message) {
  if (!ok) throw ParseError(line, message);
}

inline void expect_arity(const Line& line, std::size_t count) {
  expect(line.tokens.size() == count, line.number,
         "'" + std::string(line.tokens.front()) + "' expects " + std::to_string(count - 1) + " fields");
}

}  // namespace rsched::detail
