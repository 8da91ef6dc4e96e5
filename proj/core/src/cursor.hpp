#pragma once

// Character cursor shared by the literal parsers.

#include <cctype>
#include <string>
#include <string_view>

#include "heiscat/scalar.hpp"

namespace heiscat::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int read_int() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  /// Unsigned integer or p/q.
  Rational read_rational() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::string digits(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
      std::string den(text_.substr(dstart, pos_ - dstart));
      if (Integer(den) == 0) throw ParseError("zero denominator", dstart);
      Rational q{Integer(digits), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(digits));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Coefficient prefix for a term: "2 ", " - ", " + 1/2 ", or "-" when leading.
inline std::string signed_prefix(const Rational& c, bool first, bool omit_unit) {
  std::string out;
  const bool negative = c < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = negative ? Rational(-c) : c;
  if (!(omit_unit && mag == 1)) {
    out += to_string(mag);
    out += ' ';
  }
  return out;
}

}  // namespace heiscat::detail
