#include "plbranch/parser.hpp"

#include <cctype>
#include <string>

#include "plbranch/errors.hpp"

namespace plbranch {

namespace {

constexpr std::uint64_t kMaxExponent = 100000;

class Parser {
 public:
  // Letters in `vars` map to x (first) and y (second, if present).
  Parser(std::string_view text, const PrimeField& field, std::string_view vars)
      : text_(text), field_(field), vars_(vars) {}

  BivarPoly parse() {
    skip_space();
    if (at_end()) fail(ErrorKind::Syntax, "empty expression");
    BivarPoly result = expr();
    skip_space();
    if (!at_end()) fail(ErrorKind::Syntax, std::string("unexpected '") + peek() + "'");
    return result;
  }

 private:
  BivarPoly expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    BivarPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BivarPoly term() {
    BivarPoly acc = power();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  BivarPoly power() {
    BivarPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (peek() == '-') fail(ErrorKind::NegativeExponent, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(ErrorKind::Syntax, "expected a non-negative integer exponent");
    const std::size_t start = pos_;
    std::uint64_t e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (e > kMaxExponent) {
        pos_ = start;
        fail(ErrorKind::Syntax, "exponent exceeds " + std::to_string(kMaxExponent));
      }
      ++pos_;
    }
    return base.pow(e);
  }

  BivarPoly primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = field_.modulus();
      std::uint64_t r = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        r = (r * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
        ++pos_;
      }
      return BivarPoly::constant(field_, FieldElement{static_cast<std::uint32_t>(r)});
    }
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      skip_space();
      if (peek() != ')') fail(ErrorKind::Syntax, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto slot = vars_.find(c);
      if (slot == std::string_view::npos)
        fail(ErrorKind::UnknownVariable, std::string("unknown variable '") + c + "'");
      ++pos_;
      return slot == 0 ? BivarPoly::x(field_) : BivarPoly::y(field_);
    }
    if (at_end()) fail(ErrorKind::Syntax, "unexpected end of input");
    fail(ErrorKind::Syntax, std::string("unexpected '") + c + "'");
  }

  bool starts_primary() const {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const {
    throw InputError(kind, what + " at column " + std::to_string(pos_ + 1) + " in \"" +
                               std::string(text_) + "\"");
  }

  std::string_view text_;
  const PrimeField& field_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

UnivarPoly parse_univar(std::string_view text, const PrimeField& field) {
  const BivarPoly parsed = Parser(text, field, "t").parse();
  UnivarPoly result(field);
  for (const auto& [m, c] : parsed.terms()) result.add_term(m.x, c);
  return result;
}

BivarPoly parse_bivar(std::string_view text, const PrimeField& field) {
  return Parser(text, field, "xy").parse();
}

}  // namespace plbranch
