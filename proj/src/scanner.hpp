/* Copyright 2026 The ccskp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CCSKP_SRC_SCANNER_HPP
#define CCSKP_SRC_SCANNER_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "ccskp/syntax.hpp"

namespace ccskp::detail {

// Character-level cursor shared by the process and proof-label readers.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool lower_ahead() {
    char c = peek();
    return c >= 'a' && c <= 'z';
  }

  std::string identifier() {
    skip_ws();
    if (!lower_ahead()) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Name name() {
    std::size_t start = (skip_ws(), pos_);
    std::string id = identifier();
    if (id == "tau") throw ParseError("'tau' is reserved and cannot be used as a name", start);
    return Name{id};
  }

  Key natural() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("key must be a natural number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError("key literal out of range", start);
      v = v * 10 + d;
      ++pos_;
    }
    return Key{v};
  }

  // act := name | "~" name | "tau"
  Label action() {
    if (accept('~')) return Label::output(name());
    std::string id = identifier();
    if (id == "tau") return Label::tau();
    return Label::input(Name{id});
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string where = pos_ < text_.size() ? std::string(" near '") + text_[pos_] + "'" : " at end of input";
    throw ParseError(msg + where, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace ccskp::detail

#endif  // CCSKP_SRC_SCANNER_HPP
