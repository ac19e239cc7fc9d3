#pragma once

// Recursive-descent parser for field and matrix literals.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | 't' ('^' SINT)? | '(' expr ')' | '-' factor
//   matrix := '[' row (';' row)* ']'
//   row    := expr (',' expr)*
//
// Whitespace is insignificant. '/' makes printed quotients and fractional
// coefficients re-parseable; dividing by something that vanishes in the
// configured coefficient field (e.g. 1/2 over F_2) is a CoefficientError.

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sl3pong/base.hpp"
#include "sl3pong/field.hpp"
#include "sl3pong/ratfunc.hpp"

namespace sl3pong {

template <class K>
struct ParsedMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<RatFunc<K>> entries;  // row-major

  const RatFunc<K>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

template <class K>
using ParseResult = std::variant<RatFunc<K>, ParsedMatrix<K>>;

template <class K>
class Parser {
 public:
  Parser(std::string_view text, const FieldCtx<K>& ctx) : s_(text), ctx_(ctx) {}

  ParseResult<K> parse() {
    skip_ws();
    ParseResult<K> r = peek() == '[' ? ParseResult<K>(parse_matrix())
                                     : ParseResult<K>(parse_expr());
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

  RatFunc<K> parse_scalar() {
    auto r = parse();
    if (auto* f = std::get_if<RatFunc<K>>(&r)) return *f;
    throw ParseError("expected a scalar, found a matrix", 0);
  }

  ParsedMatrix<K> parse_matrix_literal() {
    auto r = parse();
    if (auto* m = std::get_if<ParsedMatrix<K>>(&r)) return *m;
    throw ParseError("expected a matrix, found a scalar", 0);
  }

 private:
  std::string_view s_;
  FieldCtx<K> ctx_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  RatFunc<K> parse_expr() {
    RatFunc<K> acc = parse_term();
    for (;;) {
      if (eat('+')) acc = acc + parse_term();
      else if (eat('-')) acc = acc - parse_term();
      else return acc;
    }
  }

  RatFunc<K> parse_term() {
    RatFunc<K> acc = parse_factor();
    for (;;) {
      if (eat('*')) acc = acc * parse_factor();
      else if (eat('/')) {
        std::size_t at = pos_;
        RatFunc<K> d = parse_factor();
        if (d.is_zero())
          throw CoefficientError("divisor vanishes in the coefficient field (offset " +
                                 std::to_string(at) + ")");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc<K> parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      get();
      return -parse_factor();
    }
    if (c == '(') {
      get();
      RatFunc<K> e = parse_expr();
      expect(')');
      return e;
    }
    if (c == 't') {
      get();
      long e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        e = parse_sint();
      }
      return RatFunc<K>::t_power(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc<K>::from_coeff(ctx_.from_decimal(parse_digits()));
    }
    throw ParseError("expected a factor", pos_);
  }

  std::string parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  long parse_sint() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    std::string d = parse_digits();
    long v = std::stol(d);
    return neg ? -v : v;
  }

  ParsedMatrix<K> parse_matrix() {
    expect('[');
    ParsedMatrix<K> m;
    std::size_t row = 0;
    for (;;) {
      std::size_t cols = 0;
      for (;;) {
        m.entries.push_back(parse_expr());
        ++cols;
        if (!eat(',')) break;
      }
      if (row == 0) m.cols = cols;
      else if (cols != m.cols) throw ParseError("ragged matrix rows", pos_);
      ++row;
      if (!eat(';')) break;
    }
    m.rows = row;
    expect(']');
    return m;
  }
};

template <class K>
RatFunc<K> parse_ratfunc(std::string_view text, const FieldCtx<K>& ctx) {
  return Parser<K>(text, ctx).parse_scalar();
}

}  // namespace sl3pong
