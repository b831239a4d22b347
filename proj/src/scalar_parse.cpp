#include <cctype>

#include "homq/scalar.hpp"

namespace homq {

namespace {

// Recursive descent over
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('+'|'-') unary | power
//   power := atom ('^' exponent)?
//   exponent := sign? INT | '(' sign? INT ')'
//   atom  := INT | IDENT | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const FieldPtr& field) : s_(text), f_(field) {}

  Scalar run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Scalar v = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const char* kind = "syntax") {
    throw ParseError(kind, pos_, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) throw ParseError("division_by_zero", at, "division by the zero scalar");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    long e = exponent();
    if (e < 0 && base.is_zero()) throw ParseError("division_by_zero", at, "zero raised to a negative power");
    return base.pow(e);
  }

  long exponent() {
    bool paren = accept('(');
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("exponent must be an integer literal");
    long e = integer_literal();
    if (paren && !accept(')')) fail("expected ')' closing the exponent");
    return sign * e;
  }

  long integer_literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    return std::stol(digits);
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(f_, 0) + Scalar(mpq_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return identifier(s_.substr(start, pos_ - start), start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Scalar identifier(const std::string& name, std::size_t at) {
    if (f_->var_index(name) >= 0) return Scalar::variable(f_, name);
    if (name == "zeta") {
      if (f_->cyclotomic_order() <= 0)
        throw ParseError("undeclared_variable", at, "'zeta' used without a cyclotomic order");
      return Scalar::zeta(f_);
    }
    if ((name == "q" || name == "q_half") && f_->var_index("t") >= 0) {
      Scalar t = Scalar::variable(f_, "t");
      return name == "q" ? t * t : t;
    }
    throw ParseError("undeclared_variable", at, "undeclared variable '" + name + "'");
  }

  const std::string& s_;
  FieldPtr f_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
  Scalar v = Parser(text, field).run();
  return v.field() == field ? v : v.embed(field);
}

}  // namespace homq
