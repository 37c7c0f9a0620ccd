// Recursive-descent parser for anticommutative identities.
//
//   identity := expr ['=' expr]        (a bare expr is read as expr = 0)
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := coeff ['*'] factors | coeff | factors
//   factors  := factor (['*'] factor)*         -- at most TWO factors;
//   factor   := var | '(' expr ')' | 'J' '(' expr ',' expr ',' expr ')'
//   coeff    := int ['/' int]
//
// A product of three or more factors is ambiguous in a nonassociative world
// and is rejected; parenthesize. Variables are single letters with an optional
// digit tail (x, y, a1, ...), so juxtaposition like (xy)z parses as expected.
// A bare integer term must be literally 0.
#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "cdalg/free_element.hpp"

namespace cdalg {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
struct ParsedIdentity {
  FreeElement<F> element;              // lhs - rhs
  std::vector<std::string> var_names;  // id -> name, ids in order of first appearance
};

namespace detail {

struct Token {
  enum Kind { Var, Int, Jac, LParen, RParen, Comma, Plus, Minus, Star, Slash, Equals, End } kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex_identity(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Int, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string name = s.substr(start, i - start);
      out.push_back({name == "J" ? Token::Jac : Token::Var, name, start});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case ',': k = Token::Comma; break;
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '=': k = Token::Equals; break;
      default:
        throw parse_error("unexpected character '" + std::string(1, c) + "' at position " +
                          std::to_string(start));
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

template <class F>
class IdentityParser {
public:
  IdentityParser(const F& f, const std::string& src) : f_(f), toks_(lex_identity(src)) {}

  ParsedIdentity<F> run() {
    auto lhs = expr();
    FreeElement<F> rhs;
    if (peek().kind == Token::Equals) {
      next();
      rhs = expr();
    }
    expect(Token::End, "end of input");
    return {lhs.sub(f_, rhs), names_};
  }

private:
  const F& f_;
  std::vector<Token> toks_;
  size_t at_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;

  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }
  void expect(typename Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw parse_error(std::string("expected ") + what + " at position " + std::to_string(peek().pos));
    next();
  }

  int var_id(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = int(names_.size());
    ids_[name] = id;
    names_.push_back(name);
    return id;
  }

  bool starts_factor(const Token& t) const {
    return t.kind == Token::Var || t.kind == Token::Jac || t.kind == Token::LParen;
  }

  FreeElement<F> expr() {
    bool negate = false;
    if (peek().kind == Token::Minus) {
      next();
      negate = true;
    }
    auto acc = term();
    if (negate) acc = acc.neg(f_);
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      auto t = term();
      acc = minus ? acc.sub(f_, t) : acc.add(f_, t);
    }
    return acc;
  }

  FreeElement<F> term() {
    typename F::Elem coeff = f_.one();
    bool have_coeff = false;
    if (peek().kind == Token::Int) {
      have_coeff = true;
      long long num = std::stoll(next().text);
      coeff = f_.from_int(num);
      if (peek().kind == Token::Slash) {
        next();
        if (peek().kind != Token::Int) throw parse_error("expected integer denominator");
        coeff = f_.div(coeff, f_.from_int(std::stoll(next().text)));
      }
      if (peek().kind == Token::Star) next();
    }
    std::vector<FreeElement<F>> factors;
    while (starts_factor(peek())) {
      factors.push_back(factor());
      if (peek().kind == Token::Star && starts_factor(toks_[at_ + 1])) next();
    }
    if (factors.empty()) {
      if (!have_coeff) throw parse_error("empty term at position " + std::to_string(peek().pos));
      if (!f_.is_zero(coeff))
        throw parse_error("constant term: the algebra has no unit");
      return FreeElement<F>::zero();
    }
    if (factors.size() > 2)
      throw parse_error("product of " + std::to_string(factors.size()) +
                        " factors is ambiguous; parenthesize");
    auto e = factors.size() == 2 ? FreeElement<F>::product(f_, factors[0], factors[1]) : factors[0];
    return have_coeff ? e.scale(f_, coeff) : e;
  }

  FreeElement<F> factor() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Var:
        return FreeElement<F>::variable(f_, var_id(t.text));
      case Token::LParen: {
        auto e = expr();
        expect(Token::RParen, "')'");
        return e;
      }
      case Token::Jac: {
        expect(Token::LParen, "'(' after J");
        auto a = expr();
        expect(Token::Comma, "','");
        auto b = expr();
        expect(Token::Comma, "','");
        auto c = expr();
        expect(Token::RParen, "')'");
        return FreeElement<F>::jacobiator(f_, a, b, c);
      }
      default:
        throw parse_error("expected a factor at position " + std::to_string(t.pos));
    }
  }
};

}  // namespace detail

template <class F>
ParsedIdentity<F> parse_identity(const F& f, const std::string& src) {
  return detail::IdentityParser<F>(f, src).run();
}

}  // namespace cdalg
