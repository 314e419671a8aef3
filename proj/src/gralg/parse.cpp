#include "chowcob/gralg/parse.hpp"

#include <cctype>

namespace chowcob {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const AlgebraPtr& A, const Definitions* defs) : s_(s), A_(A), defs_(defs) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // '-' or the unicode minus sign
  bool minus() {
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool plus() {
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(A_);
    skip();
    bool neg = minus();
    if (!neg) plus();
    acc += neg ? -term() : term();
    for (;;) {
      skip();
      if (minus())
        acc -= term();
      else if (plus())
        acc += term();
      else
        break;
    }
    return acc;
  }

  bool at_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Polynomial term() {
    skip();
    std::size_t start = pos_;
    Polynomial t = Polynomial::constant(A_, PLocal(1));
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t dpos = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", dpos);
        if (mpz_divisible_ui_p(den.get_mpz_t(), A_->p()))
          throw ParseError("denominator divisible by p=" + std::to_string(A_->p()), dpos);
      }
      t = Polynomial::constant(A_, PLocal::from_fraction(num, den, A_->p()));
      any = true;
    }
    for (;;) {
      skip();
      std::size_t save = pos_;
      bool star = pos_ < s_.size() && s_[pos_] == '*';
      if (star) ++pos_;
      if (!at_factor()) {
        if (star) throw ParseError("expected factor after '*'", pos_);
        pos_ = save;
        break;
      }
      if (star && !any) throw ParseError("'*' without left operand", save);
      t *= factor();
      any = true;
    }
    if (!any) throw ParseError("expected term", start);
    return t;
  }

  Polynomial factor() {
    skip();
    std::size_t start = pos_;
    Polynomial base(A_);
    bool odd_gen = false;
    if (s_[pos_] == '(') {
      ++pos_;
      base = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    } else {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (auto i = A_->index(name)) {
        base = Polynomial::generator(A_, *i);
        odd_gen = A_->odd(*i);
      } else if (defs_ && defs_->count(name)) {
        base = defs_->at(name).recast(A_);
      } else {
        throw ParseError("unknown identifier '" + name + "'", start);
      }
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t epos = pos_;
      mpz_class e = integer();
      if (e > 4096) throw ParseError("exponent too large", epos);
      if (odd_gen && e > 1) throw ParseError("odd generator raised to a power > 1", epos);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  const std::string& s_;
  AlgebraPtr A_;
  const Definitions* defs_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const AlgebraPtr& A, const Definitions* defs) {
  return Parser(text, A, defs).run();
}

}  // namespace chowcob
