#pragma once

/**
 * @file poly_parse.hpp
 * @brief Parser for integer polynomials written as text.
 *
 * Grammar (whitespace allowed between tokens):
 *
 *   polynomial := [sign] term { sign term }
 *   term       := integer [ ['*'] power ] | power
 *   power      := VAR [ ('^' | '**') integer ]
 *   sign       := '+' | '-'
 *
 * VAR is a single ASCII letter and must be the same letter throughout.
 * Repeated powers are summed, so "x + x" is 2x.
 */

#include "int_poly.hpp"
#include "integer.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monoquad {

struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::invalid_argument("at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  IntPoly parse() {
    std::vector<Integer> coeffs;
    skip_ws();
    if (at_end()) throw ParseError(i_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip_ws();
      } else if (!first) {
        throw ParseError(i_, std::string("expected '+' or '-', found '") + peek() + "'");
      }
      auto [coef, exp] = term();
      if (coeffs.size() <= exp) coeffs.resize(exp + 1, Integer(0));
      coeffs[exp] += sign * coef;
      first = false;
      skip_ws();
    }
    return IntPoly(std::move(coeffs));
  }

 private:
  std::pair<Integer, std::size_t> term() {
    if (at_end()) throw ParseError(i_, "expected a term");
    Integer coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = integer();
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*' && !(i_ + 1 < s_.size() && s_[i_ + 1] == '*')) {
        ++i_;
        skip_ws();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
          throw ParseError(i_, "expected a variable after '*'");
      }
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      variable();
      skip_ws();
      std::size_t exp = 1;
      if (!at_end() && (peek() == '^' || (peek() == '*' && i_ + 1 < s_.size() && s_[i_ + 1] == '*'))) {
        i_ += peek() == '^' ? 1 : 2;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(i_, "expected an exponent");
        const std::size_t at = i_;
        const Integer e = integer();
        if (e > 1'000'000) throw ParseError(at, "exponent too large");
        exp = e.get_ui();
      }
      return {coef, exp};
    }
    if (!have_coef) throw ParseError(i_, std::string("unexpected character '") + peek() + "'");
    return {coef, 0};
  }

  Integer integer() {
    const std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  void variable() {
    const char v = peek();
    if (var_ == 0) var_ = v;
    else if (v != var_)
      throw ParseError(i_, std::string("mixed variables '") + var_ + "' and '" + v + "'");
    ++i_;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError(i_, "variables are single letters");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }

  std::string_view s_;
  std::size_t i_ = 0;
  char var_ = 0;
};

}  // namespace detail

inline IntPoly parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace monoquad
