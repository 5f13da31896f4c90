#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fiberscope/error.hpp"
#include "fiberscope/numeric.hpp"

namespace fiberscope {

/// A Laurent polynomial in two variables a, b with arbitrary-precision
/// integer coefficients. Terms are kept in a map keyed by exponent pair;
/// zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Exponents = std::array<std::int64_t, 2>;
  using TermMap = std::map<Exponents, Int>;

  LaurentPoly2() = default;

  static LaurentPoly2 from_terms(const std::vector<std::pair<Exponents, Int>>& terms) {
    LaurentPoly2 p;
    for (const auto& [e, c] : terms) p.add_term(e[0], e[1], c);
    return p;
  }

  void add_term(std::int64_t i, std::int64_t j, const Int& coeff) {
    if (coeff == 0) return;
    const Exponents key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// The exponent support, ascending lexicographically.
  std::vector<Exponents> support() const {
    std::vector<Exponents> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  /// Multiplies by the monomial a^i b^j (translates the support).
  LaurentPoly2 shifted(std::int64_t i, std::int64_t j) const {
    LaurentPoly2 p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponents{e[0] + i, e[1] + j}, c);
    return p;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  TermMap terms_;
};

namespace detail {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly2 parse() {
    LaurentPoly2 poly;
    skip_ws();
    if (eof()) throw SyntaxError("empty polynomial expression");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw err("expected '+' or '-' between terms");
      }
      parse_term(poly, sign);
      skip_ws();
      first = false;
    }
    return poly;
  }

 private:
  // term := factor (['*'] factor)*; factor := integer | var ['^' integer]
  void parse_term(LaurentPoly2& poly, int sign) {
    Int coeff = sign;
    std::int64_t ei = 0;
    std::int64_t ej = 0;
    bool any_factor = false;
    for (;;) {
      skip_ws();
      if (eof()) break;
      const char ch = peek();
      if (ch == '*') {
        if (!any_factor) throw err("'*' without preceding factor");
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_unsigned_int();
        any_factor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        ++pos_;
        std::int64_t exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
          ++pos_;
          skip_ws();
          exp = parse_signed_int64();
        }
        if (ch == 'a') {
          ei += exp;
        } else if (ch == 'b') {
          ej += exp;
        } else {
          throw SyntaxError(std::string("unknown variable '") + ch + "' (expected a or b)",
                            "unknown_variable");
        }
        any_factor = true;
        continue;
      }
      break;  // '+', '-', or junk; junk is rejected by the outer loop
    }
    if (!any_factor) throw err("empty term");
    poly.add_term(ei, ej, coeff);
  }

  Int parse_unsigned_int() {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) throw err("expected integer");
    return Int(digits);
  }

  std::int64_t parse_signed_int64() {
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) throw err("expected exponent after '^'");
    const std::int64_t v = std::stoll(digits);
    return neg ? -v : v;
  }

  SyntaxError err(const std::string& what) const {
    return SyntaxError(what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a signed sum of terms like "a^5 b^4 - 3*a b^-2 + 7". Within a term,
/// juxtaposition and '*' both mean multiplication; exponents may be negative.
inline LaurentPoly2 parse_laurent(std::string_view text) {
  detail::LaurentParser parser(text);
  return parser.parse();
}

/// Canonical printer: terms in descending lexicographic exponent order, which
/// matches the conventional highest-degree-first reading order.
inline std::string print_laurent(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Int abs_c = negative ? Int(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto append_var = [&mono](char name, std::int64_t exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += " ";
      mono += name;
      if (exp != 1) mono += "^" + std::to_string(exp);
    };
    append_var('a', e[0]);
    append_var('b', e[1]);
    if (mono.empty()) {
      out += abs_c.str();
    } else {
      if (abs_c != 1) out += abs_c.str() + " ";
      out += mono;
    }
  }
  return out;
}

}  // namespace fiberscope
