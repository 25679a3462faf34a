/*
   Copyright 2026 The liewidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIEWIDTH_PARSE_HPP
#define LIEWIDTH_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liewidth/errors.hpp"
#include "liewidth/rational.hpp"

namespace liewidth::detail {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

/// With `derivative_tokens`, "d/dv" is lexed as the single identifier "d/dv".
std::vector<Token> tokenize(std::string_view text, bool derivative_tokens = false);

// Recursive-descent parser for
//   expr    := [+|-] term { (+|-) term }
//   term    := factor { (*|/) factor }
//   factor  := primary [ ^ [+|-] int ]
//   primary := int | ident | ( expr ) | - factor
// Evaluation is delegated to a Builder providing Value, constant, variable,
// add, sub, mul, neg, pow and as_constant.
template <class Builder>
class ExprParser {
 public:
  using Value = typename Builder::Value;

  ExprParser(std::vector<Token> tokens, Builder& builder) : toks_(std::move(tokens)), b_(builder) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(peek().pos));
  }

  Value expr() {
    bool negate = false;
    if (accept(Token::Minus)) negate = true;
    else accept(Token::Plus);
    Value acc = term();
    if (negate) acc = b_.neg(acc);
    for (;;) {
      if (accept(Token::Plus)) acc = b_.add(acc, term());
      else if (accept(Token::Minus)) acc = b_.sub(acc, term());
      else return acc;
    }
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (accept(Token::Star)) {
        acc = b_.mul(acc, factor());
      } else if (accept(Token::Slash)) {
        Value d = factor();
        std::optional<Rational> c = b_.as_constant(d);
        if (!c || c->is_zero()) fail("division only by a nonzero rational constant");
        acc = b_.mul(acc, b_.constant(c->inverse()));
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    Value base = primary();
    if (!accept(Token::Caret)) return base;
    bool neg = false;
    if (accept(Token::Minus)) neg = true;
    else accept(Token::Plus);
    if (peek().kind != Token::Int) fail("expected integer exponent");
    const std::string& digits = next().text;
    if (digits.size() > 6) fail("exponent too large");
    long e = std::stol(digits);
    return b_.pow(base, neg ? -e : e);
  }

  Value primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Int:
        ++pos_;
        return b_.constant(Rational::parse(t.text));
      case Token::Ident:
        ++pos_;
        return b_.variable(t.text);
      case Token::LParen: {
        ++pos_;
        Value v = expr();
        if (!accept(Token::RParen)) fail("expected ')'");
        return v;
      }
      case Token::Minus:
        ++pos_;
        return b_.neg(factor());
      default:
        fail(t.kind == Token::End ? std::string("unexpected end of input") : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Builder& b_;
};

template <class Builder>
typename Builder::Value parse_expression(std::string_view text, Builder& builder, bool derivative_tokens = false) {
  ExprParser<Builder> p(tokenize(text, derivative_tokens), builder);
  return p.parse();
}

}  // namespace liewidth::detail

#endif  // LIEWIDTH_PARSE_HPP
