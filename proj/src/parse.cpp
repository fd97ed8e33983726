#include <cctype>
#include <string>

#include "locbez/errors.hpp"
#include "locbez/poly.hpp"

namespace locbez {

namespace {

constexpr unsigned kMaxParsedExponent = 1000;

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  MultiPoly run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool at_primary_start() {
    skip_ws();
    if (pos_ == text_.size()) return false;
    const auto ch = static_cast<unsigned char>(text_[pos_]);
    return std::isalpha(ch) || ch == '_' || ch == '(';
  }

  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (at_primary_start()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const mpz_class e = integer_literal();
      if (e > kMaxParsedExponent) throw ParseError("exponent too large", at);
      base = pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const auto ch = static_cast<unsigned char>(text_[pos_]);
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(ch)) {
      mpq_class value(integer_literal());
      if (accept('/')) {
        skip_ws();
        const std::size_t den_at = pos_;
        const mpz_class den = integer_literal();
        if (den == 0) throw ParseError("zero denominator", den_at);
        value /= mpq_class(den);
      }
      try {
        return MultiPoly::constant(ring_, FieldElem(value, ring_->field()));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(ch) || ch == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return MultiPoly::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse(std::string_view text, RingPtr ring) {
  return Parser(text, std::move(ring)).run();
}

}  // namespace locbez
