#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/errors.hpp"

namespace loopkit::detail {

struct Token {
  std::string_view text;
  int column; // 1-based
};

/// Reads significant lines (skipping blanks and '#' comments) and splits them
/// into whitespace-separated tokens with column positions for diagnostics.
class TextScanner {
public:
  explicit TextScanner(std::istream &in) : in_(in) {}

  /// Advances to the next significant line. Returns false at end of input.
  bool next_line() {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!line_.empty() && line_.back() == '\r')
        line_.pop_back();
      auto first = line_.find_first_not_of(" \t");
      if (first == std::string::npos || line_[first] == '#')
        continue;
      tokenize();
      return true;
    }
    tokens_.clear();
    return false;
  }

  void require_line(const char *what) {
    if (!next_line())
      throw FormatError(std::string("unexpected end of input, expected ") + what, line_no_ + 1, 1);
  }

  const std::vector<Token> &tokens() const { return tokens_; }
  const std::string &line() const { return line_; }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string &what, int column) const {
    throw FormatError(what, line_no_, column);
  }

  std::int64_t integer(const Token &t) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail("expected an integer, got '" + std::string(t.text) + "'", t.column);
    return v;
  }

  std::int64_t non_negative(const Token &t) const {
    auto v = integer(t);
    if (v < 0)
      fail("expected a non-negative integer, got " + std::to_string(v), t.column);
    return v;
  }

  void expect_count(std::size_t n, const char *what) const {
    if (tokens_.size() != n)
      fail(std::string("expected ") + std::to_string(n) + " " + what + ", found " +
               std::to_string(tokens_.size()),
           tokens_.size() > n ? tokens_[n].column : int(line_.size()) + 1);
  }

private:
  void tokenize() {
    tokens_.clear();
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t'))
        ++i;
      if (i >= line_.size())
        break;
      std::size_t j = i;
      while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t')
        ++j;
      tokens_.push_back({std::string_view(line_).substr(i, j - i), int(i) + 1});
      i = j;
    }
  }

  std::istream &in_;
  std::string line_;
  std::vector<Token> tokens_;
  int line_no_ = 0;
};

} // namespace loopkit::detail
