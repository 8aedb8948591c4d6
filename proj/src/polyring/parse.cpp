#include "gspline/polyring.hpp"

#include <cctype>

namespace gspline {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Ring &ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size())
      throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError(std::string("unexpected character '") + s_[pos_] + "'",
                       pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial acc = term();
    if (negate)
      acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*'))
      acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      mpz_class e = digits();
      if (!e.fits_uint_p() || e > 1000000)
        throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected unsigned integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skip_ws();
    if (pos_ == s_.size())
      throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(digits());
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        std::size_t den_pos = pos_;
        mpz_class den = digits();
        if (den == 0)
          throw ParseError("zero denominator", den_pos);
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
        if (ring_->characteristic() != 0 && den % ring_->characteristic() == 0)
          throw ParseError("denominator divisible by the characteristic",
                           den_pos);
      } else {
        pos_ = save;
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx)
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  const Ring &ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const Ring &ring) {
  return Parser(text, ring).parse();
}

} // namespace gspline
