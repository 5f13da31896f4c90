#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fiberscope/error.hpp"
#include "fiberscope/numeric.hpp"

namespace fiberscope {

/// A univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The zero polynomial is the empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }

  /// x^k with coefficient c.
  static IntPolynomial monomial(std::size_t k, Int c) {
    std::vector<Int> coeffs(k + 1, Int(0));
    coeffs[k] = std::move(c);
    return IntPolynomial(std::move(coeffs));
  }

  const std::vector<Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  const Int& leading_coefficient() const {
    static const Int zero = 0;
    return coeffs_.empty() ? zero : coeffs_.back();
  }

  Int coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Int(k));
    return IntPolynomial(std::move(d));
  }

  /// f(-x): flip the sign of odd-degree coefficients.
  IntPolynomial reflected() const {
    std::vector<Int> c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<Int> prod(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        prod[i + j] += coeffs_[i] * other.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(prod));
  }

  IntPolynomial operator+(const IntPolynomial& other) const {
    std::vector<Int> sum(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] = coefficient(i) + other.coefficient(i);
    }
    return IntPolynomial(std::move(sum));
  }

  IntPolynomial operator-() const {
    std::vector<Int> c = coeffs_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

namespace detail {

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

/// Positive content of a nonzero polynomial.
inline Int content_of(const IntPolynomial& f) {
  Int g = 0;
  for (const Int& c : f.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

/// Divides out the positive content; the leading sign is preserved, which is
/// what Sturm sequences require (only positive scalings are allowed).
inline IntPolynomial primitive_preserving_sign(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  const Int g = content_of(f);
  if (g == 1) return f;
  std::vector<Int> c = f.coefficients();
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

/// Pseudo-remainder of A by B with an explicitly tracked sign: returns a
/// positive multiple of -rem(A, B), the next Sturm element. Each elimination
/// step multiplies the running remainder by lc(B), so the accumulated scalar
/// sign is sign(lc(B))^steps; the result is negated when that scalar is
/// positive.
inline IntPolynomial negated_remainder(const IntPolynomial& A, const IntPolynomial& B) {
  IntPolynomial R = A;
  const Int& lead_b = B.leading_coefficient();
  int scalar_sign = 1;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    const std::size_t shift = static_cast<std::size_t>(R.degree() - B.degree());
    // R <- lc(B)·R − lc(R)·x^shift·B, dropping R's leading term exactly.
    std::vector<Int> next(static_cast<std::size_t>(R.degree()), Int(0));
    const Int lead_r = R.leading_coefficient();
    for (std::size_t i = 0; i < static_cast<std::size_t>(R.degree()); ++i) {
      Int v = lead_b * R.coefficient(i);
      if (i >= shift) v -= lead_r * B.coefficient(i - shift);
      next[i] = std::move(v);
    }
    R = IntPolynomial(std::move(next));
    scalar_sign *= sign_of(lead_b);
  }
  if (scalar_sign > 0) R = -R;
  return primitive_preserving_sign(R);
}

/// Primitive polynomial gcd (sign of the remainder is irrelevant here).
/// Result is primitive with positive leading coefficient.
inline IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_preserving_sign(a);
  b = primitive_preserving_sign(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = negated_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading_coefficient() < 0) a = -a;
  return a;
}

/// Exact division of f by a primitive divisor g (remainder must vanish).
inline IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("division_by_zero", "polynomial division by zero");
  std::vector<Int> rem = f.coefficients();
  const std::int64_t dq = f.degree() - g.degree();
  if (dq < 0) throw DomainError("inexact_division", "degree of divisor exceeds dividend");
  std::vector<Int> quot(static_cast<std::size_t>(dq) + 1, Int(0));
  for (std::int64_t k = dq; k >= 0; --k) {
    const Int& top = rem[static_cast<std::size_t>(k + g.degree())];
    if (top == 0) continue;
    if (top % g.leading_coefficient() != 0) {
      throw DomainError("inexact_division", "polynomial division is not exact");
    }
    const Int q = top / g.leading_coefficient();
    quot[static_cast<std::size_t>(k)] = q;
    for (std::int64_t i = 0; i <= g.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * g.coefficient(static_cast<std::size_t>(i));
    }
  }
  for (const Int& c : rem) {
    if (c != 0) throw DomainError("inexact_division", "polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace detail

/// The squarefree part f / gcd(f, f'): same set of real roots, no repeated
/// factors. Returned primitive with positive leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "squarefree part of the zero polynomial");
  }
  IntPolynomial primitive = detail::primitive_preserving_sign(f);
  if (primitive.leading_coefficient() < 0) primitive = -primitive;
  if (primitive.degree() == 0) return IntPolynomial::constant(1);
  const IntPolynomial g = detail::primitive_gcd(primitive, primitive.derivative());
  if (g.degree() == 0) return primitive;
  IntPolynomial h = detail::exact_divide(primitive, g);
  h = detail::primitive_preserving_sign(h);
  if (h.leading_coefficient() < 0) h = -h;
  return h;
}

/// Sturm sequence of a squarefree polynomial: S0 = f, S1 = f', and
/// S_{k+1} = -rem(S_{k-1}, S_k) up to positive scalars, computed with
/// sign-controlled pseudo-remainders so everything stays in exact integers.
inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<IntPolynomial> seq;
  seq.push_back(f);
  IntPolynomial d = detail::primitive_preserving_sign(f.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    IntPolynomial next =
        detail::negated_remainder(seq[seq.size() - 2], seq[seq.size() - 1]);
    if (next.is_zero()) break;
    seq.push_back(std::move(next));
  }
  return seq;
}

namespace detail {

/// Sign variations of the sequence evaluated at +inf or -inf: the sign at
/// +inf is sign(lc); at -inf it flips for odd degree.
inline int sign_variations_at_infinity(const std::vector<IntPolynomial>& seq,
                                       bool positive_infinity) {
  int variations = 0;
  int previous = 0;
  for (const auto& s : seq) {
    int sgn = sign_of(s.leading_coefficient());
    if (!positive_infinity && s.degree() % 2 != 0) sgn = -sgn;
    if (sgn == 0) continue;
    if (previous != 0 && sgn != previous) ++variations;
    previous = sgn;
  }
  return variations;
}

}  // namespace detail

/// Number of distinct real roots, by Sturm's theorem on the squarefree part:
/// V(-inf) - V(+inf).
inline std::int64_t count_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "root count of the zero polynomial");
  }
  if (f.degree() == 0) {
    throw DomainError("constant_polynomial", "root count of a constant polynomial");
  }
  const IntPolynomial sf = squarefree_part(f);
  const auto seq = sturm_sequence(sf);
  return detail::sign_variations_at_infinity(seq, false) -
         detail::sign_variations_at_infinity(seq, true);
}

/// True iff f has at least one real root; odd degree short-circuits since an
/// odd-degree real polynomial always has one.
inline bool has_real_root(const IntPolynomial& f) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "root existence for the zero polynomial");
  }
  if (f.degree() == 0) {
    throw DomainError("constant_polynomial", "root existence for a constant polynomial");
  }
  if (f.degree() % 2 != 0) return true;
  return count_real_roots(f) >= 1;
}

// ============================================================================
// Parsing
// ============================================================================

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    skip_ws();
    if (eof()) throw SyntaxError("empty polynomial expression");
    IntPolynomial poly;
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
      poly = poly + parse_term(sign);
      skip_ws();
      first = false;
    }
    return poly;
  }

 private:
  IntPolynomial parse_term(int sign) {
    Int coeff = sign;
    std::int64_t exp = 0;
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
        if (ch != 'x') {
          throw SyntaxError(std::string("unknown variable '") + ch + "' (expected x)",
                            "unknown_variable");
        }
        ++pos_;
        std::int64_t e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        exp += e;
        any_factor = true;
        continue;
      }
      break;
    }
    if (!any_factor) throw err("empty term");
    return IntPolynomial::monomial(static_cast<std::size_t>(exp), coeff);
  }

  Int parse_unsigned_int() {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) throw err("expected integer");
    return Int(digits);
  }

  std::int64_t parse_exponent() {
    if (!eof() && peek() == '-') {
      throw SyntaxError("negative exponents are not allowed in an integer polynomial");
    }
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) throw err("expected exponent after '^'");
    return std::stoll(digits);
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

/// Parses either an expression like "x^4 - x^3 - 2x^2 - x + 1" or a bracketed
/// coefficient list "[1, -1, -2, -1, 1]" (constant term first).
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) {
    ++start;
  }
  if (start < text.size() && text[start] == '[') {
    std::size_t end = text.find_last_not_of(" \t\r\n");
    if (end == std::string_view::npos || text[end] != ']') {
      throw SyntaxError("coefficient list must end with ']'");
    }
    std::vector<Int> coeffs;
    std::string current;
    for (std::size_t i = start + 1; i <= end; ++i) {
      const char ch = text[i];
      if (ch == ',' || ch == ']') {
        std::size_t a = current.find_first_not_of(" \t");
        if (a == std::string::npos) {
          throw SyntaxError(ch == ']' && coeffs.empty() ? "empty coefficient list"
                                                        : "empty coefficient in list");
        }
        std::size_t b = current.find_last_not_of(" \t");
        const std::string item = current.substr(a, b - a + 1);
        const bool digits_ok =
            item != "-" && item.find_first_not_of("0123456789",
                                                  item[0] == '-' ? 1 : 0) ==
                               std::string::npos;
        if (!digits_ok) {
          throw SyntaxError("bad coefficient '" + item + "' in list");
        }
        coeffs.emplace_back(item);
        current.clear();
      } else {
        current.push_back(ch);
      }
    }
    return IntPolynomial(std::move(coeffs));
  }
  detail::PolyParser parser(text);
  return parser.parse();
}

/// Canonical printer, descending powers: "x^4 - x^3 - 2x^2 - x + 1".
inline std::string print_polynomial(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::int64_t k = f.degree(); k >= 0; --k) {
    const Int c = f.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Int abs_c = negative ? Int(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += abs_c.str();
    } else {
      if (abs_c != 1) out += abs_c.str();
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace fiberscope
