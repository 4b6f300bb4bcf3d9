#include "planemod/parse.hpp"

#include <cctype>

#include "planemod/error.hpp"

namespace planemod {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CycNum scalar_only() {
    CycNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  Mat3 matrix_only() {
    Mat3 m;
    expect('[');
    for (int i = 0; i < 3; ++i) {
      if (i > 0) expect(',');
      expect('[');
      for (int j = 0; j < 3; ++j) {
        if (j > 0) expect(',');
        m[i][j] = expr();
      }
      expect(']');
    }
    expect(']');
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer too long");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  CycNum expr() {
    CycNum v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  CycNum term() {
    CycNum v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        CycNum d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  CycNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  CycNum power() {
    CycNum base = primary();
    if (!accept('^')) return base;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    std::int64_t e = 0;
    if (accept('(')) {
      bool inner_neg = accept('-');
      e = integer();
      if (inner_neg) e = -e;
      expect(')');
    } else {
      e = integer();
    }
    if (neg) e = -e;
    if (e < 0 && base.is_zero()) fail("zero to a negative power");
    return base.pow(e);
  }

  CycNum primary() {
    skip();
    if (accept('(')) {
      CycNum v = expr();
      expect(')');
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'z') {
      ++pos_;
      expect('(');
      const std::int64_t n = integer();
      expect(')');
      if (n <= 0) fail("conductor must be positive");
      return CycNum::zeta(n, 1);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      const std::size_t len = digits();
      return CycNum(mpq_class(mpz_class(std::string(s_.substr(start, len)))));
    }
    fail("unexpected input");
  }

  std::size_t digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ - start;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_scalar(std::string_view text) { return Parser(text).scalar_only(); }

Mat3 parse_matrix(std::string_view text) { return Parser(text).matrix_only(); }

std::string format_matrix(const Mat3& m) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (int j = 0; j < 3; ++j) {
      if (j > 0) out += ",";
      out += m[i][j].str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace planemod
