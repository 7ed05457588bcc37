#ifndef SPRKIT_FREE_ALGEBRA_HPP
#define SPRKIT_FREE_ALGEBRA_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sprkit/errors.hpp"
#include "sprkit/ring.hpp"

namespace sprkit {

/// Generators of the free algebra, from largest to smallest in the term order.
inline constexpr std::string_view nc_alphabet = "abcdwxyz";

inline int letter_rank(char c) {
  const auto pos = nc_alphabet.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(nc_alphabet.size() - 1 - pos);
}

/// Degree-lexicographic order with a > b > c > d > w > x > y > z.
inline bool deglex_less(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int ru = letter_rank(u[i]);
    const int rv = letter_rank(v[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

struct DeglexGreater {
  bool operator()(const std::string& a, const std::string& b) const { return deglex_less(b, a); }
};

/// Element of Q<a,b,c,d,w,x,y,z>: monomial (word) -> nonzero rational.
/// Terms iterate from the deglex-largest monomial down.
class NCPolynomial {
 public:
  using TermMap = std::map<std::string, Rational, DeglexGreater>;

  NCPolynomial() = default;

  static NCPolynomial constant(const Rational& c) { return monomial("", c); }

  static NCPolynomial monomial(const std::string& word, const Rational& c = 1) {
    for (char ch : word) {
      if (letter_rank(ch) < 0) throw Error(ErrorKind::parse_error, std::string("unknown generator '") + ch + "'");
    }
    NCPolynomial p;
    if (c != 0) p.terms_.emplace(word, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

  Rational coefficient(const std::string& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const std::string& word, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [word, c] : terms_) {
      std::string term;
      if (word.empty()) {
        term = c.str();
      } else if (c == 1) {
        term = word;
      } else if (c == -1) {
        term = "-" + word;
      } else {
        term = c.str() + "*" + word;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, c);
    return a;
  }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) {
    for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
    return a;
  }
  friend NCPolynomial operator-(const NCPolynomial& a) {
    NCPolynomial out;
    for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
    return out;
  }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
    return out;
  }
  friend NCPolynomial operator*(const Rational& k, const NCPolynomial& a) {
    NCPolynomial out;
    if (k == 0) return out;
    for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, k * c);
    return out;
  }
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

NCPolynomial parse_nc_polynomial(std::string_view text);

/// Ring context for the (noncommutative) free algebra.
struct FreeAlgebra {
  using value_type = NCPolynomial;
  static constexpr bool commutative = false;

  NCPolynomial zero() const { return {}; }
  NCPolynomial one() const { return NCPolynomial::constant(1); }
  NCPolynomial from_integer(const Integer& k) const { return NCPolynomial::constant(Rational(k)); }
  NCPolynomial add(const NCPolynomial& a, const NCPolynomial& b) const { return a + b; }
  NCPolynomial sub(const NCPolynomial& a, const NCPolynomial& b) const { return a - b; }
  NCPolynomial mul(const NCPolynomial& a, const NCPolynomial& b) const { return a * b; }
  NCPolynomial neg(const NCPolynomial& a) const { return -a; }
  bool equal(const NCPolynomial& a, const NCPolynomial& b) const { return a == b; }
  bool is_zero(const NCPolynomial& a) const { return a.is_zero(); }
  std::string to_string(const NCPolynomial& a) const { return a.to_string(); }
  friend bool operator==(const FreeAlgebra&, const FreeAlgebra&) { return true; }
};

struct RewriteRule {
  std::string lhs;
  NCPolynomial rhs;
};

/// Oriented relations lhs -> rhs. Every monomial of a replacement must be
/// deglex-smaller than its leading word, which makes reduction terminate.
class RewriteSystem {
 public:
  explicit RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      if (r.lhs.empty()) throw Error(ErrorKind::invalid_rewrite_system, "empty leading word");
      for (char ch : r.lhs) {
        if (letter_rank(ch) < 0) {
          throw Error(ErrorKind::invalid_rewrite_system, std::string("unknown generator '") + ch + "'");
        }
      }
      for (const auto& [w, c] : r.rhs.terms()) {
        if (!deglex_less(w, r.lhs)) {
          throw Error(ErrorKind::invalid_rewrite_system,
                      "replacement monomial '" + w + "' is not smaller than '" + r.lhs + "'");
        }
      }
    }
  }

  /// aw -> 1 - by, ax -> -bz, cw -> -dy, cx -> 1 - dz
  static RewriteSystem shepherdson() {
    const auto one = NCPolynomial::constant(1);
    return RewriteSystem({
        {"aw", one - NCPolynomial::monomial("by")},
        {"ax", -NCPolynomial::monomial("bz")},
        {"cw", -NCPolynomial::monomial("dy")},
        {"cx", one - NCPolynomial::monomial("dz")},
    });
  }

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

 private:
  std::vector<RewriteRule> rules_;
};

enum class ReductionStrategy {
  /// leftmost occurrence of the earliest-listed applicable rule
  leftmost,
  /// rightmost occurrence of any rule
  rightmost,
};

inline constexpr std::size_t default_rewrite_budget = 64;

/// Reduces p until no leading word occurs in any monomial, always rewriting
/// inside the deglex-largest reducible monomial. The step budget is
/// `steps_per_monomial` times the number of terms of p.
inline NCPolynomial nc_normal_form(const NCPolynomial& p, const RewriteSystem& rs,
                                   ReductionStrategy strategy = ReductionStrategy::leftmost,
                                   std::size_t steps_per_monomial = default_rewrite_budget) {
  NCPolynomial cur = p;
  const std::size_t budget = steps_per_monomial * std::max<std::size_t>(1, p.terms().size());
  std::size_t steps = 0;
  while (true) {
    std::string word;
    Rational coef;
    const RewriteRule* rule = nullptr;
    std::size_t at = 0;
    for (const auto& [w, c] : cur.terms()) {
      if (strategy == ReductionStrategy::leftmost) {
        for (const auto& r : rs.rules()) {
          const auto pos = w.find(r.lhs);
          if (pos != std::string::npos) {
            rule = &r;
            at = pos;
            break;
          }
        }
      } else {
        for (const auto& r : rs.rules()) {
          const auto pos = w.rfind(r.lhs);
          if (pos != std::string::npos && (rule == nullptr || pos > at)) {
            rule = &r;
            at = pos;
          }
        }
      }
      if (rule) {
        word = w;
        coef = c;
        break;
      }
    }
    if (!rule) return cur;
    if (++steps > budget) {
      throw Error(ErrorKind::non_terminating, "rewrite budget of " + std::to_string(budget) + " steps exceeded");
    }
    const std::string left = word.substr(0, at);
    const std::string right = word.substr(at + rule->lhs.size());
    cur.add_term(word, -coef);
    for (const auto& [w, c] : rule->rhs.terms()) cur.add_term(left + w + right, coef * c);
  }
}

struct OverlapAmbiguity {
  enum class Kind { overlap, inclusion };
  std::size_t first;
  std::size_t second;
  std::string word;
  Kind kind;
};

/// Critical pairs of the leading words: a proper suffix of one equal to a
/// proper prefix of another (including itself), or one word inside another.
inline std::vector<OverlapAmbiguity> overlap_check(const RewriteSystem& rs) {
  std::vector<OverlapAmbiguity> out;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const std::string& u = rules[i].lhs;
      const std::string& v = rules[j].lhs;
      for (std::size_t len = 1; len < std::min(u.size(), v.size()); ++len) {
        if (u.compare(u.size() - len, len, v, 0, len) == 0) {
          out.push_back({i, j, u + v.substr(len), OverlapAmbiguity::Kind::overlap});
        }
      }
      if (i != j && v.size() <= u.size() && u.find(v) != std::string::npos) {
        out.push_back({i, j, u, OverlapAmbiguity::Kind::inclusion});
      }
    }
  }
  return out;
}

namespace detail {

class NCParser {
 public:
  explicit NCParser(std::string_view text) : text_(text) {}

  NCPolynomial parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw Error(ErrorKind::parse_error, "empty polynomial");
    NCPolynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected token");
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
  [[noreturn]] void fail(const std::string& why) const {
    const std::string tok = pos_ < text_.size() ? std::string(1, text_[pos_]) : "<end>";
    throw Error(ErrorKind::parse_error, why + " '" + tok + "' at offset " + std::to_string(pos_));
  }
  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  NCPolynomial expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    NCPolynomial acc = term();
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

  NCPolynomial term() {
    NCPolynomial acc = factor();
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

  NCPolynomial factor() {
    NCPolynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent at");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 3) throw Error(ErrorKind::parse_error, "exponent too large '" + digits + "'");
    NCPolynomial out = NCPolynomial::constant(1);
    for (unsigned long e = std::stoul(digits); e > 0; --e) out = out * base;
    return out;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  NCPolynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a value at");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NCPolynomial inner = expr();
      if (!peek(')')) fail("expected ')' at");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected denominator at");
        Integer den = digits();
        if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator");
        return NCPolynomial::constant(Rational(num, den));
      }
      return NCPolynomial::constant(Rational(num));
    }
    if (letter_rank(c) >= 0) {
      ++pos_;
      return NCPolynomial::monomial(std::string(1, c));
    }
    fail("unknown generator");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline NCPolynomial parse_nc_polynomial(std::string_view text) { return detail::NCParser(text).parse_all(); }

/// Parses "aw=1-by" style relations, oriented left to right.
inline RewriteRule parse_rewrite_rule(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::parse_error, "rule needs '=': '" + std::string(text) + "'");
  std::string lhs;
  for (char c : text.substr(0, eq)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (letter_rank(c) < 0) throw Error(ErrorKind::parse_error, std::string("bad leading word letter '") + c + "'");
    lhs += c;
  }
  return {lhs, parse_nc_polynomial(text.substr(eq + 1))};
}

}  // namespace sprkit

#endif  // SPRKIT_FREE_ALGEBRA_HPP
