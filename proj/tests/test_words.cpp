#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "word.hpp"

using namespace cu2;

TEST_CASE("concat") {
  CHECK(concat(Word{1}, Word{2}) == Word{1, 2});
  CHECK(concat(Word{}, Word{2, 1}) == Word{2, 1});
  CHECK(concat(Word{1, 1}, Word{2}) == Word{1, 1, 2});
  CHECK(concat(Word{1}, Word{}) == Word{1});
}

TEST_CASE("concat is associative with the empty word as identity") {
  std::vector<Word> all;
  for (int l = 0; l <= 4; ++l) {
    for (const Word& w : enumerate_words(l)) {
      all.push_back(w);
    }
  }
  for (const Word& u : all) {
    CHECK(concat(u, Word{}) == u);
    CHECK(concat(Word{}, u) == u);
  }
  // associativity over short triples
  for (int a = 0; a <= 2; ++a) {
    for (const Word& u : enumerate_words(a)) {
      for (int b = 0; b <= 2; ++b) {
        for (const Word& v : enumerate_words(b)) {
          for (int c = 0; c <= 2; ++c) {
            for (const Word& w : enumerate_words(c)) {
              CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("reverse") {
  CHECK(reversed(Word{1, 2}) == Word{2, 1});
  CHECK(reversed(Word{}) == Word{});
  CHECK(reversed(Word{1, 1, 2}) == Word{2, 1, 1});
  for (const Word& w : enumerate_words(5)) {
    CHECK(reversed(reversed(w)) == w);
  }
}

TEST_CASE("theta on pinned values") {
  CHECK(theta(Word{}) == 0);
  CHECK(theta(Word{1, 1}) == 0);
  CHECK(theta(Word{2, 2}) == 3);
}

TEST_CASE("theta_inv on pinned values") {
  CHECK(theta_inv(0, 2) == Word{1, 1});
  CHECK(theta_inv(3, 2) == Word{2, 2});
  CHECK(theta_inv(0, 0) == Word{});
  CHECK_THROWS_AS(theta_inv(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(theta_inv(-1, 3), std::invalid_argument);
}

TEST_CASE("theta is a bijection onto [0, 2^alpha) with theta_inv inverse") {
  for (int alpha = 0; alpha <= 12; ++alpha) {
    std::vector<bool> seen(std::size_t{1} << alpha, false);
    for (const Word& w : enumerate_words(alpha)) {
      const std::int64_t r = theta(w);
      REQUIRE(r >= 0);
      REQUIRE(r < (std::int64_t{1} << alpha));
      CHECK_FALSE(seen[static_cast<std::size_t>(r)]);
      seen[static_cast<std::size_t>(r)] = true;
      CHECK(theta_inv(r, alpha) == w);
    }
  }
}

TEST_CASE("strip_common_suffix") {
  auto s = strip_common_suffix(Word{1, 2}, Word{2, 2});
  CHECK(s.left == Word{1});
  CHECK(s.right == Word{2});
  CHECK(s.suffix == Word{2});

  s = strip_common_suffix(Word{1}, Word{1});
  CHECK(s.left == Word{});
  CHECK(s.right == Word{});
  CHECK(s.suffix == Word{1});

  s = strip_common_suffix(Word{1, 2}, Word{1});
  CHECK(s.left == Word{1, 2});
  CHECK(s.right == Word{1});
  CHECK(s.suffix == Word{});
}

TEST_CASE("strip_common_suffix is idempotent on its heads") {
  for (const Word& u : enumerate_words(4)) {
    for (const Word& w : enumerate_words(3)) {
      const auto s = strip_common_suffix(u, w);
      CHECK(concat(s.left, s.suffix) == u);
      CHECK(concat(s.right, s.suffix) == w);
      const auto again = strip_common_suffix(s.left, s.right);
      CHECK(again.suffix == Word{});
    }
  }
}

TEST_CASE("enumerate_words") {
  CHECK(enumerate_words(0) == std::vector<Word>{Word{}});
  CHECK(enumerate_words(1) == std::vector<Word>{Word{1}, Word{2}});
  CHECK(enumerate_words(2) ==
        std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 1}, Word{2, 2}});
  CHECK(enumerate_words(10).size() == 1024);
}

TEST_CASE("word digit round trip") {
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("") == Word{});
  CHECK(word_digits(Word{2, 1}) == "21");
  CHECK_THROWS_AS(parse_word("103"), std::invalid_argument);
}
