#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/polynomial.hpp"

namespace novikov {

namespace detail {

struct Token {
  enum Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(c)) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::ident, std::string(s.substr(start, i - start)), start});
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::plus; break;
        case '-': k = Token::minus; break;
        case '*': k = Token::star; break;
        case '/': k = Token::slash; break;
        case '^': k = Token::caret; break;
        case '(': k = Token::lparen; break;
        case ')': k = Token::rparen; break;
        default:
          throw Error(Errc::parse_error, "unexpected character '" + std::string(1, s[i]) + "' at " +
                                             std::to_string(i));
      }
      out.push_back({k, std::string(1, s[i]), start});
      ++i;
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := ['-'] primary ['^' int]
// primary:= int ['/' int] | ident | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : toks_(tokenize(text)), ring_(std::move(ring)), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    if (peek().kind != Token::end) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, msg + " at position " + std::to_string(peek().pos) + " in '" +
                                       std::string(text_) + "'");
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (peek().kind == Token::plus || peek().kind == Token::minus) {
        neg = next().kind == Token::minus;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  bool starts_factor() const {
    auto k = peek().kind;
    return k == Token::number || k == Token::ident || k == Token::lparen;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek().kind == Token::star) {
        next();
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    bool neg = false;
    if (peek().kind == Token::minus) {
      next();
      neg = true;
    }
    Polynomial p = primary();
    if (peek().kind == Token::caret) {
      next();
      if (peek().kind != Token::number) fail("expected exponent");
      std::string e = next().text;
      if (e.size() > 4) fail("exponent too large");
      p = p.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return neg ? -p : p;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Token::number) {
      std::string num = next().text;
      if (peek().kind == Token::slash) {
        next();
        if (peek().kind != Token::number) fail("expected denominator");
        std::string den = next().text;
        return Polynomial::constant(ring_, Rational::parse(num + "/" + den));
      }
      return Polynomial::constant(ring_, Rational::parse(num));
    }
    if (t.kind == Token::ident) {
      std::string name = next().text;
      auto idx = ring_->index_of(name);
      if (!idx) throw Error(Errc::unknown_variable, "unknown variable '" + name + "' in '" + std::string(text_) + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (t.kind == Token::lparen) {
      next();
      Polynomial p = expr();
      if (peek().kind != Token::rparen) fail("expected ')'");
      next();
      return p;
    }
    fail("unexpected token '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  std::string_view text_;
};

}  // namespace detail

/// Parses a polynomial in the ring's variables. Accepts the plain term
/// grammar plus `*`, `^`, and parenthesized subexpressions.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  detail::Parser p(text, ring);
  return p.parse_all();
}

/// Univariate polynomial in variable `var` over Q.
inline UPoly parse_upoly(std::string_view text, const std::string& var) {
  if (!valid_identifier(var)) throw Error(Errc::parse_error, "invalid variable name '" + var + "'");
  auto ring = Ring::make({{var, VarKind::extension_generator}}, MonomialOrder::identity(OrderStyle::lex, 1));
  return parse_polynomial(text, ring).to_upoly(0);
}

/// Names of all identifiers appearing in `text`, in order of first appearance.
inline std::vector<std::string> identifiers_in(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : detail::tokenize(text))
    if (t.kind == detail::Token::ident && std::find(out.begin(), out.end(), t.text) == out.end())
      out.push_back(t.text);
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Drops a `#` comment and surrounding whitespace.
inline std::string strip_comment(std::string_view line) {
  auto h = line.find('#');
  return trim(h == std::string_view::npos ? line : line.substr(0, h));
}

}  // namespace novikov
