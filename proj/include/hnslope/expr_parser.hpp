#pragma once

// Recursive-descent parser for the entry grammar shared by all rings:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := number ['/' number] | ident ['^' power] | '(' expr ')' | 'O' '(' ident ['^' power] ')'
//   power  := ['-'] digits | '(' rational ')'
//
// The algebra adapter turns literals and identifiers into ring values.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "hnslope/error.hpp"
#include "hnslope/rational.hpp"

namespace hnslope {

template <class Value, class Algebra>
class ExprParser {
 public:
  ExprParser(std::string_view text, const Algebra& algebra) : text_(text), alg_(algebra) {}

  Value parse() {
    skip_ws();
    if (pos_ == text_.size()) error("empty expression");
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational_literal() {
    std::string s;
    if (accept('-')) s = "-";
    s += digits();
    if (accept('/')) s += "/" + digits();
    return Rational::parse(s);
  }

  Rational power() {
    skip_ws();
    if (accept('(')) {
      Rational r = rational_literal();
      expect(')');
      return r;
    }
    std::string s;
    if (accept('-')) s = "-";
    return Rational::parse(s + digits());
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = term();
    if (negate) acc = alg_.neg(acc);
    while (true) {
      if (accept('+')) acc = alg_.add(acc, term());
      else if (accept('-')) acc = alg_.sub(acc, term());
      else return acc;
    }
  }

  Value term() {
    Value acc = factor();
    while (true) {
      if (accept('*')) acc = alg_.mul(acc, factor());
      else if (accept('/')) acc = alg_.div(acc, factor());
      else return acc;
    }
  }

  Value factor() {
    skip_ws();
    if (pos_ == text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s = digits();
      // `3/2` is a literal; `1/p` is a division handled by term().
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        s += "/" + digits();
      }
      return alg_.constant(Rational::parse(s));
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::string name = ident();
      if (name == "O") {
        expect('(');
        const std::string sym = ident();
        Rational e(1);
        if (accept('^')) e = power();
        expect(')');
        auto v = alg_.big_o(sym, e);
        if (!v) {
          pos_ = at;
          error("precision term not allowed for '" + sym + "'");
        }
        return *v;
      }
      Rational e(1);
      if (accept('^')) e = power();
      auto v = alg_.symbol(name, e);
      if (!v) {
        pos_ = at;
        error("unknown symbol '" + name + "'");
      }
      return *v;
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

template <class Value, class Algebra>
Value parse_expression(std::string_view text, const Algebra& algebra) {
  return ExprParser<Value, Algebra>(text, algebra).parse();
}

}  // namespace hnslope
