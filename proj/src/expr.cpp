#include "continuum/expr.hpp"

#include <cctype>

namespace continuum {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t dim, const TwistConfig& twist)
      : text_(text), dim_(dim), twist_(twist) {}

  PseudoPoint run() {
    PseudoPoint r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

private:
  PseudoPoint expr() {
    PseudoPoint acc = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc = add(acc, term());
      else if (eat('-'))
        acc = sub(acc, term());
      else
        return acc;
    }
  }

  PseudoPoint term() {
    PseudoPoint acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        acc = mul(acc, factor(), twist_);
      else
        return acc;
    }
  }

  PseudoPoint factor() {
    skip_ws();
    if (eat('-')) return neg(factor());
    return primary();
  }

  PseudoPoint primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PseudoPoint r = expr();
      skip_ws();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == 'e') return unit_ref();
    if (std::isdigit(static_cast<unsigned char>(c))) return embed(dim_, rational_literal());
    throw ParseError("expected literal, unit, or '('", pos_);
  }

  PseudoPoint unit_ref() {
    const std::size_t start = pos_;
    ++pos_;  // 'e'
    skip_ws();
    if (!eat('[')) throw ParseError("expected '[' after 'e'", pos_);
    CoordIndex idx;
    for (;;) {
      skip_ws();
      idx.coeffs.push_back(integer_literal());
      skip_ws();
      if (eat(']')) break;
      if (!eat(',')) throw ParseError("expected ',' or ']'", pos_);
    }
    if (idx.dim() != dim_)
      throw std::invalid_argument("unit e" + idx.str() + " at position " + std::to_string(start) +
                                  " has arity " + std::to_string(idx.dim()) + ", configured dim is " +
                                  std::to_string(dim_));
    return unit(idx);
  }

  Int integer_literal() {
    bool negative = eat('-');
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", pos_);
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? Int(-v) : v;
  }

  Rational rational_literal() {
    Int n = integer_literal();
    if (eat('/')) {
      const std::size_t dpos = pos_;
      Int d = integer_literal();
      if (d == 0) throw ParseError("zero denominator", dpos);
      return Rational(n, d);
    }
    return Rational(n);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t dim_;
  TwistConfig twist_;
  std::size_t pos_ = 0;
};

}  // namespace

PseudoPoint eval_pseudo_expr(std::string_view text, std::size_t dim, const TwistConfig& twist) {
  return Parser(text, dim, twist).run();
}

}  // namespace continuum
