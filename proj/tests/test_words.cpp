#include <catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include <fiberscope/words.hpp>

#include "oracles.hpp"

namespace fs = fiberscope;

namespace {

const std::string kRelator = "a^2 b^3 a^2 b^-2 a^-3 b^-2 a^2 b^3";

}  // namespace

TEST_CASE("letters pair with inverses", "[words]") {
  CHECK(fs::inverse_of(fs::Letter::a) == fs::Letter::a_inv);
  CHECK(fs::inverse_of(fs::Letter::a_inv) == fs::Letter::a);
  CHECK(fs::inverse_of(fs::Letter::b) == fs::Letter::b_inv);
  CHECK(fs::are_inverse(fs::Letter::b_inv, fs::Letter::b));
  CHECK_FALSE(fs::are_inverse(fs::Letter::a, fs::Letter::b_inv));
}

TEST_CASE("parse_word handles letters, powers, and inverses", "[words]") {
  const fs::Word w = fs::parse_word(kRelator);
  CHECK(w.size() == 19);
  CHECK(fs::exponent_sums(w) == std::pair<std::int64_t, std::int64_t>{3, 2});

  const fs::Word commutator = fs::parse_word("a b A B");
  CHECK(commutator.size() == 4);
  CHECK(fs::exponent_sums(commutator) == std::pair<std::int64_t, std::int64_t>{0, 0});

  CHECK(fs::parse_word("A^-2") == fs::parse_word("a a"));
  CHECK(fs::parse_word("b^3") == fs::parse_word("b b b"));
}

TEST_CASE("parse_word freely reduces", "[words]") {
  CHECK(fs::parse_word("a A").empty());
  CHECK(fs::parse_word("b a A B").empty());
  CHECK(fs::parse_word("a b b B A a") == fs::parse_word("a b"));
  CHECK(fs::parse_word("a^3 a^-3 b").size() == 1);
}

TEST_CASE("parse_word rejects malformed input", "[words]") {
  using fs::testing::thrown_code;
  CHECK(thrown_code([] { fs::parse_word("a^0"); }) == "zero_exponent");
  CHECK(thrown_code([] { fs::parse_word("c"); }) == "syntax_error");
  CHECK(thrown_code([] { fs::parse_word("a^"); }) == "syntax_error");
  CHECK(thrown_code([] { fs::parse_word("a^x"); }) == "syntax_error");
  CHECK(thrown_code([] { fs::parse_word("ab"); }) == "syntax_error");  // tokens need spaces
}

TEST_CASE("print_word emits canonical power notation", "[words]") {
  CHECK(fs::print_word(fs::parse_word("a a a")) == "a^3");
  CHECK(fs::print_word(fs::parse_word("A A")) == "a^-2");
  CHECK(fs::print_word(fs::parse_word("a b A B")) == "a b a^-1 b^-1");
  CHECK(fs::print_word(fs::parse_word(kRelator)) == kRelator);
  CHECK(fs::print_word(fs::Word{}).empty());
}

TEST_CASE("build_path traces unit steps from the origin", "[words]") {
  using V = std::array<std::int64_t, 2>;

  const fs::LatticePath square = fs::build_path(fs::parse_word("a b A B"));
  CHECK(square.vertices ==
        std::vector<V>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(square.closed());
  CHECK(square.segment_count() == 4);

  const fs::LatticePath straight = fs::build_path(fs::parse_word("a^2"));
  CHECK(straight.vertices == std::vector<V>{{0, 0}, {1, 0}, {2, 0}});
  CHECK_FALSE(straight.closed());

  const fs::LatticePath relator = fs::build_path(fs::parse_word(kRelator));
  CHECK(relator.vertices.size() == 20);
  CHECK(relator.vertices.back() == V{3, 2});
  CHECK_FALSE(relator.closed());
}

TEST_CASE("random words: print/parse round-trip and endpoint consistency", "[words]") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    const std::string text = fs::testing::random_word_text(rng);
    const fs::Word w = fs::parse_word(text);
    CHECK(fs::parse_word(fs::print_word(w)) == w);

    const auto sums = fs::exponent_sums(w);
    if (!w.empty()) {
      const fs::LatticePath path = fs::build_path(w);
      CHECK(path.vertices.back() ==
            std::array<std::int64_t, 2>{sums.first, sums.second});
      CHECK(path.vertices.size() == w.size() + 1);
    }
  }
}

TEST_CASE("free reduction preserves exponent sums", "[words]") {
  std::mt19937 rng(991);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 40);
  for (int i = 0; i < 200; ++i) {
    std::vector<fs::Letter> letters;
    std::int64_t sa = 0, sb = 0;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const auto l = static_cast<fs::Letter>(pick(rng));
      letters.push_back(l);
      const auto s = fs::step_of(l);
      sa += s[0];
      sb += s[1];
    }
    const fs::Word w = fs::Word::reduced_from(letters);
    CHECK(fs::exponent_sums(w) == std::pair<std::int64_t, std::int64_t>{sa, sb});
  }
}
