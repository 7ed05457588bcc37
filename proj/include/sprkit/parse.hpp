#ifndef SPRKIT_PARSE_HPP
#define SPRKIT_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sprkit/errors.hpp"
#include "sprkit/matrix.hpp"
#include "sprkit/ring_spec.hpp"

namespace sprkit {

RingSpec parse_ring_spec(std::string_view text);
RingElem parse_element(std::string_view text, const RingSpec& spec);
Matrix<DynRing> parse_matrix(std::string_view text, const RingSpec& spec);

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ':') {
        tokens_.emplace_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
  }

  RingSpec parse_all() {
    RingSpec s = parse();
    if (pos_ != tokens_.size()) fail(tokens_[pos_], "trailing ring-spec token");
    return s;
  }

 private:
  [[noreturn]] static void fail(const std::string& token, const std::string& why) {
    throw Error(ErrorKind::parse_error, why + " '" + token + "'");
  }

  const std::string& next(const char* what) {
    if (pos_ >= tokens_.size()) throw Error(ErrorKind::parse_error, std::string("missing ") + what);
    return tokens_[pos_++];
  }

  RingSpec parse() {
    const std::string& head = next("ring kind");
    if (head == "int") return RingSpec::integers();
    if (head == "zmod") {
      const std::string& k = next("modulus");
      if (!all_digits(k)) fail(k, "modulus is not a decimal integer:");
      try {
        return RingSpec::integers_mod(Integer(k));
      } catch (const Error& e) {
        fail(k, "invalid modulus");
      }
    }
    if (head == "poly") {
      RingSpec base = parse();
      const std::string& var = next("variable");
      try {
        return RingSpec::poly_over(base, var);
      } catch (const Error&) {
        fail(var, "invalid variable");
      }
    }
    if (head == "quot") {
      RingSpec poly = parse();
      if (poly.kind() != RingKind::poly_over) {
        throw Error(ErrorKind::parse_error, "quotient base must be a polynomial ring, got '" + poly.to_string() + "'");
      }
      const std::string& lit = next("monic modulus");
      const RingElem m = parse_element(lit, poly);
      try {
        return RingSpec::quotient(poly.base(), poly.variable(), m.coefficients());
      } catch (const Error& e) {
        fail(lit, e.what());
      }
    }
    fail(head, "unknown ring kind");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := primary ['^' digits]
// primary:= digits | identifier | '(' expr ')'
class ElementParser {
 public:
  ElementParser(std::string_view text, RingSpec spec) : text_(text), spec_(std::move(spec)) {}

  RingElem parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw Error(ErrorKind::parse_error, "empty element literal");
    RingElem e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_here("unexpected token");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string token_here() const {
    if (pos_ >= text_.size()) return "<end>";
    std::size_t end = pos_ + 1;
    auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (word(text_[pos_])) {
      while (end < text_.size() && word(text_[end])) ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  [[noreturn]] void fail_here(const std::string& why) const {
    throw Error(ErrorKind::parse_error, why + " '" + token_here() + "' in \"" + std::string(text_) + "\"");
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  RingElem expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    RingElem acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  RingElem factor() {
    RingElem base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail_here("expected exponent at");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 9) throw Error(ErrorKind::parse_error, "exponent too large '" + digits + "'");
      return pow(base, std::stoull(digits));
    }
    return base;
  }

  RingElem primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail_here("expected a value at");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElem inner = expr();
      if (!peek(')')) fail_here("expected ')' at");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        // "2t" is fine, but "7seven" style tokens are not numbers
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
        const std::string ident(text_.substr(pos_, end - pos_));
        if (!has_variable(ident)) {
          pos_ = start;
          fail_here("bad numeral");
        }
      }
      return RingElem::from_integer(spec_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string ident = token_here();
      RingSpec s = spec_;
      while (s.kind() == RingKind::poly_over || s.kind() == RingKind::quotient_poly) {
        if (s.variable() == ident) {
          pos_ += ident.size();
          return RingElem::embed(spec_, RingElem::generator(s));
        }
        s = s.base();
      }
      fail_here("unknown variable");
    }
    fail_here("unexpected token");
  }

  bool has_variable(const std::string& ident) const {
    RingSpec s = spec_;
    while (s.kind() == RingKind::poly_over || s.kind() == RingKind::quotient_poly) {
      if (s.variable() == ident) return true;
      s = s.base();
    }
    return false;
  }

  std::string_view text_;
  RingSpec spec_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

inline RingElem parse_element(std::string_view text, const RingSpec& spec) {
  return detail::ElementParser(text, spec).parse_all();
}

/// Splits a "[[e,e],[e,e]]" literal into rows of element texts.
inline std::vector<std::vector<std::string>> split_matrix_literal(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      const std::string got = pos < text.size() ? std::string(1, text[pos]) : "<end>";
      throw Error(ErrorKind::parse_error, std::string("expected '") + c + "' in matrix literal, got '" + got + "'");
    }
    ++pos;
  };
  std::vector<std::vector<std::string>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<std::string> row;
    while (true) {
      int depth = 0;
      const std::size_t start = pos;
      while (pos < text.size()) {
        const char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) break;
        if (c == '[') throw Error(ErrorKind::parse_error, "unexpected '[' inside matrix row");
        ++pos;
      }
      if (pos >= text.size()) throw Error(ErrorKind::parse_error, "unterminated matrix row");
      row.emplace_back(text.substr(start, pos - start));
      if (text[pos++] == ']') break;
    }
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (pos != text.size()) throw Error(ErrorKind::parse_error, "trailing text after matrix literal '" + std::string(text.substr(pos)) + "'");
  return rows;
}

inline Matrix<DynRing> parse_matrix(std::string_view text, const RingSpec& spec) {
  const auto rows = split_matrix_literal(text);
  const std::size_t dim = rows.size();
  std::vector<RingElem> entries;
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error(ErrorKind::parse_error, "matrix literal is not square: row of length " + std::to_string(row.size()) +
                                              " in a " + std::to_string(dim) + "-row matrix");
    }
    for (const auto& e : row) entries.push_back(parse_element(e, spec));
  }
  return Matrix<DynRing>(DynRing(spec), dim, std::move(entries));
}

}  // namespace sprkit

#endif  // SPRKIT_PARSE_HPP
