// Ideal text grammar:
//   ideal := gen (',' gen)*      (empty text is the zero ideal)
//   gen   := '1' | term ('*' term)*
//   term  := 'x' INT ('^' INT)?
// Whitespace between tokens is ignored.

#include "polymat/errors.hpp"
#include "polymat/ideal.hpp"

#include <cctype>
#include <limits>

namespace polymat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) { Monomial probe(nvars); }

  std::vector<Monomial> ideal() {
    std::vector<Monomial> gens;
    skip_ws();
    if (at_end()) return gens;
    gens.push_back(generator());
    while (true) {
      skip_ws();
      if (at_end()) break;
      expect(',');
      gens.push_back(generator());
    }
    return gens;
  }

  Monomial single() {
    Monomial m = generator();
    skip_ws();
    if (!at_end()) fail("expected end of monomial");
    return m;
  }

 private:
  Monomial generator() {
    skip_ws();
    if (peek() == '1') {
      const std::size_t start = pos_;
      ++pos_;
      skip_ws();
      if (!at_end() && peek() != ',') {
        pos_ = start;
        fail("the unit generator '1' cannot be combined with other factors");
      }
      return Monomial(nvars_);
    }
    Monomial m(nvars_);
    m = m * term();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      m = m * term();
    }
    return m;
  }

  Monomial term() {
    skip_ws();
    expect('x');
    skip_ws();
    const std::size_t index_pos = pos_;
    const long index = integer();
    if (index > nvars_)
      throw ParseError("variable index " + std::to_string(index) + " out of range 1.." + std::to_string(nvars_),
                       index_pos);
    long exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = integer();
    }
    return Monomial::variable(nvars_, static_cast<int>(index - 1)).pow(static_cast<Exponent>(exponent));
  }

  long integer() {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<Exponent>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer");
    if (value == 0) throw ParseError("expected a positive integer", start);
    return value;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Monomial> parse_monomials(std::string_view text, int nvars) { return Parser(text, nvars).ideal(); }

MonomialIdeal parse_ideal(std::string_view text, int nvars) {
  return MonomialIdeal(nvars, parse_monomials(text, nvars));
}

Monomial parse_monomial(std::string_view text, int nvars) { return Parser(text, nvars).single(); }

}  // namespace polymat
