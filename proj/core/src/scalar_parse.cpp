#include "hopfq/scalar_parse.hpp"

#include <cctype>
#include <string>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int order) : text_(text), order_(order) {}

  Scalar run() {
    skip_space();
    if (at_end()) fail("empty expression");
    Scalar v = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  long long small_int() {
    skip_space();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) {
      pos_ = start;
      fail("integer too large");
    }
    long long v = std::stoll(d);
    return neg ? -v : v;
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
        const std::size_t at = pos_;
        Scalar d = unary();
        try {
          v = v / d;
        } catch (const Error& e) {
          pos_ = at;
          fail(std::string("division failed: ") + e.what());
        }
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
    const std::size_t at = pos_;
    long long e = small_int();
    try {
      return base.pow(e);
    } catch (const Error& err) {
      pos_ = at;
      fail(std::string("power failed: ") + err.what());
    }
  }

  Scalar atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Scalar(Rational::parse(digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "tau") return Scalar::tau();
      if (word == "h") {
        if (order_ == Series::kFree) {
          pos_ = start;
          fail("'h' needs a truncation order");
        }
        return Scalar::hbar(order_);
      }
      if (word == "z") {
        expect('(');
        const std::size_t at = pos_;
        long long n = small_int();
        if (n < 1) {
          pos_ = at;
          fail("root-of-unity conductor must be positive");
        }
        expect(',');
        long long k = small_int();
        expect(')');
        return Scalar(Cyclotomic::root_of_unity(k, n));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, int order) {
  Scalar v = Parser(text, order).run();
  return order == Series::kFree ? v : v.at_order(order);
}

}  // namespace hopfq
