#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fiberscope/error.hpp"

namespace fiberscope {

// ============================================================================
// Letters and words in the rank-2 free group
// ============================================================================

/// Generators a, b and their inverses. The numeric layout pairs each letter
/// with its inverse via xor 1.
enum class Letter : unsigned char { a = 0, a_inv = 1, b = 2, b_inv = 3 };

constexpr Letter inverse_of(Letter l) {
  return static_cast<Letter>(static_cast<unsigned>(l) ^ 1u);
}

constexpr bool are_inverse(Letter x, Letter y) { return inverse_of(x) == y; }

constexpr char to_char(Letter l) {
  constexpr std::array<char, 4> table{'a', 'A', 'b', 'B'};
  return table[static_cast<unsigned>(l)];
}

/// Unit step traced by a letter: a -> +x, b -> +y, inverses negative.
constexpr std::array<std::int64_t, 2> step_of(Letter l) {
  switch (l) {
    case Letter::a: return {1, 0};
    case Letter::a_inv: return {-1, 0};
    case Letter::b: return {0, 1};
    case Letter::b_inv: return {0, -1};
  }
  return {0, 0};
}

/// A freely reduced word in {a, a^-1, b, b^-1}. Reduction is enforced at
/// construction, so every Word in circulation satisfies the invariant.
class Word {
 public:
  Word() = default;

  /// Builds a Word, cancelling adjacent inverse pairs until none remain.
  static Word reduced_from(const std::vector<Letter>& letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (Letter l : letters) {
      if (!w.letters_.empty() && are_inverse(w.letters_.back(), l)) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// ============================================================================
// Parsing and printing
// ============================================================================

/// Parses whitespace-separated tokens `a`, `b`, `A`, `B`, or `x^n` with
/// nonzero integer n (negative exponents invert). Uppercase means inverse.
/// The result is freely reduced.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    Letter base;
    switch (token[0]) {
      case 'a': base = Letter::a; break;
      case 'A': base = Letter::a_inv; break;
      case 'b': base = Letter::b; break;
      case 'B': base = Letter::b_inv; break;
      default:
        throw SyntaxError("unexpected token '" + std::string(token) + "' in word");
    }

    std::int64_t exponent = 1;
    if (token.size() > 1) {
      if (token[1] != '^') {
        throw SyntaxError("unexpected token '" + std::string(token) + "' in word");
      }
      const std::string digits(token.substr(2));
      if (digits.empty() || digits == "-" ||
          digits.find_first_not_of("0123456789", digits[0] == '-' ? 1 : 0) !=
              std::string::npos) {
        throw SyntaxError("bad exponent in token '" + std::string(token) + "'");
      }
      exponent = std::strtoll(digits.c_str(), nullptr, 10);
      if (exponent == 0) {
        throw SyntaxError("zero exponent in token '" + std::string(token) + "'",
                          "zero_exponent");
      }
    }

    const Letter l = exponent > 0 ? base : inverse_of(base);
    const std::int64_t count = exponent > 0 ? exponent : -exponent;
    for (std::int64_t i = 0; i < count; ++i) letters.push_back(l);
  }
  return Word::reduced_from(letters);
}

/// Canonical printer: maximal runs in power notation, inverses as `^-n`.
/// parse_word(print_word(w)) == w for every Word.
inline std::string print_word(const Word& w) {
  std::string out;
  const auto& letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::size_t run = j - i;
    const Letter l = letters[i];
    const bool inv = (static_cast<unsigned>(l) & 1u) != 0;
    const char base = inv ? to_char(inverse_of(l)) : to_char(l);
    if (!out.empty()) out += ' ';
    out += base;
    if (inv) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

/// (sum of a-exponents, sum of b-exponents) — the image of the word in Z^2.
inline std::pair<std::int64_t, std::int64_t> exponent_sums(const Word& w) {
  std::int64_t sa = 0, sb = 0;
  for (Letter l : w) {
    const auto s = step_of(l);
    sa += s[0];
    sb += s[1];
  }
  return {sa, sb};
}

// ============================================================================
// Lattice paths
// ============================================================================

/// The unit-step path in Z^2 traced by a word, starting at the origin.
/// vertex count = word length + 1; consecutive vertices differ by a unit step.
struct LatticePath {
  std::vector<std::array<std::int64_t, 2>> vertices;

  bool closed() const {
    return vertices.size() > 1 && vertices.front() == vertices.back();
  }
  std::size_t segment_count() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

/// Traces the path of a word: a steps (+1,0), b steps (0,+1), inverses
/// negative. The final vertex equals exponent_sums(w).
inline LatticePath build_path(const Word& w) {
  LatticePath path;
  path.vertices.reserve(w.size() + 1);
  std::array<std::int64_t, 2> at{0, 0};
  path.vertices.push_back(at);
  for (Letter l : w) {
    const auto s = step_of(l);
    at[0] += s[0];
    at[1] += s[1];
    path.vertices.push_back(at);
  }
  return path;
}

}  // namespace fiberscope
