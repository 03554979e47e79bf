#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "oracles.hpp"
#include "semigroup.hpp"

using namespace cu2;

TEST_CASE("presentation relations") {
  // s_1* s_1 = e = s_2* s_2, s_1* s_2 = diamond = s_2* s_1
  CHECK(mul(CuElement::gen_star(1), CuElement::gen(1)) == CuElement::identity());
  CHECK(mul(CuElement::gen_star(2), CuElement::gen(2)) == CuElement::identity());
  CHECK(mul(CuElement::gen_star(1), CuElement::gen(2)).is_diamond());
  CHECK(mul(CuElement::gen_star(2), CuElement::gen(1)).is_diamond());
}

TEST_CASE("mul pinned cases") {
  // concatenation
  CHECK(mul(CuElement::gen(1), CuElement::gen_star(1)) ==
        CuElement::pair(Word{1}, Word{1}));
  // middle cancellation leaving a starred remainder
  CHECK(mul(CuElement::pair(Word{}, Word{1, 2}), CuElement::gen(1)) ==
        CuElement::pair(Word{}, Word{2}));
  // diamond absorbs
  CHECK(mul(CuElement::diamond(), CuElement::identity()).is_diamond());
  CHECK(mul(CuElement::identity(), CuElement::diamond()).is_diamond());
}

TEST_CASE("mul agrees with the letter-rewriting oracle up to length 4") {
  const auto elements = enumerate_elements(4);
  for (const CuElement& u : elements) {
    for (const CuElement& v : elements) {
      CHECK(mul(u, v) == testing::mul_oracle(u, v));
    }
  }
}

TEST_CASE("mul is associative (exhaustive at length <= 2)") {
  const auto elements = enumerate_elements(2);
  REQUIRE(elements.size() == 17);
  for (const CuElement& u : elements) {
    for (const CuElement& v : elements) {
      for (const CuElement& w : elements) {
        CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
      }
    }
  }
}

TEST_CASE("identity and diamond laws") {
  for (const CuElement& u : enumerate_elements(3)) {
    CHECK(mul(u, CuElement::identity()) == u);
    CHECK(mul(CuElement::identity(), u) == u);
    CHECK(mul(u, CuElement::diamond()).is_diamond());
  }
}

TEST_CASE("star") {
  CHECK(star(CuElement::pair(Word{1}, Word{2})) == CuElement::pair(Word{2}, Word{1}));
  CHECK(star(CuElement::identity()) == CuElement::identity());
  CHECK(star(CuElement::diamond()).is_diamond());
  const auto elements = enumerate_elements(3);
  for (const CuElement& u : elements) {
    CHECK(star(star(u)) == u);
    for (const CuElement& v : elements) {
      CHECK(star(mul(u, v)) == mul(star(v), star(u)));
    }
  }
}

TEST_CASE("length") {
  CHECK(length(CuElement::identity()) == 0);
  CHECK(length(CuElement::pair(Word{1}, Word{1})) == 2);
  CHECK(length(CuElement::pair(Word{1, 2}, Word{1})) == 3);
  CHECK_THROWS_AS(length(CuElement::diamond()), std::invalid_argument);
}

TEST_CASE("symmetric_core pinned cases") {
  auto [v, k] = symmetric_core(CuElement::pair(Word{1, 1}, Word{2, 1}));
  CHECK(v == CuElement::pair(Word{1}, Word{2}));
  CHECK(k == Word{1});

  std::tie(v, k) = symmetric_core(CuElement::pair(Word{1}, Word{2}));
  CHECK(v == CuElement::pair(Word{1}, Word{2}));
  CHECK(k == Word{});

  std::tie(v, k) = symmetric_core(CuElement::pair(Word{1}, Word{1}));
  CHECK(v == CuElement::identity());
  CHECK(k == Word{1});

  CHECK_THROWS_AS(symmetric_core(CuElement::diamond()), std::invalid_argument);
}

TEST_CASE("is_without_symmetric_core") {
  CHECK(is_without_symmetric_core(CuElement::identity()));
  CHECK_FALSE(is_without_symmetric_core(CuElement::pair(Word{1}, Word{1})));
  CHECK_FALSE(is_without_symmetric_core(CuElement::pair(Word{1, 2}, Word{2, 2})));
}

TEST_CASE("expansions") {
  const auto exp1 = expansions(CuElement::identity(), 1);
  CHECK(exp1 == std::vector<CuElement>{CuElement::identity(),
                                       CuElement::pair(Word{1}, Word{1}),
                                       CuElement::pair(Word{2}, Word{2})});
  CHECK(expansions(CuElement::gen(1), 0) == std::vector<CuElement>{CuElement::gen(1)});
  CHECK(expansions(CuElement::identity(), 2).size() == 7);
}

TEST_CASE("enumerate_elements counts and order") {
  CHECK(enumerate_elements(0) == std::vector<CuElement>{CuElement::identity()});
  const auto len1 = enumerate_elements(1);
  REQUIRE(len1.size() == 5);
  CHECK(len1[0] == CuElement::identity());
  CHECK(len1[1] == CuElement::gen_star(1));  // shorter left word sorts first
  CHECK(len1[2] == CuElement::gen_star(2));
  CHECK(len1[3] == CuElement::gen(1));
  CHECK(len1[4] == CuElement::gen(2));
  CHECK(enumerate_elements(2).size() == 17);
  // deterministic and strictly increasing in the canonical order
  const auto len4 = enumerate_elements(4);
  for (std::size_t k = 1; k < len4.size(); ++k) {
    CHECK(len4[k - 1] < len4[k]);
  }
}

TEST_CASE("partition into symmetric-expansion classes (length <= 8)") {
  // every element names exactly one coreless representative, and that
  // representative expands back to the element
  for (const CuElement& t : enumerate_elements(8)) {
    const auto [v, k] = symmetric_core(t);
    CHECK(is_without_symmetric_core(v));
    CHECK(t == CuElement::pair(concat(v.left(), k), concat(v.right(), k)));
  }
}

TEST_CASE("expansion sets of distinct coreless elements are disjoint") {
  std::vector<CuElement> coreless;
  for (const CuElement& t : enumerate_elements(4)) {
    if (is_without_symmetric_core(t)) {
      coreless.push_back(t);
    }
  }
  std::set<CuElement> seen;
  for (const CuElement& v : coreless) {
    for (const CuElement& t : expansions(v, 4)) {
      CHECK(seen.insert(t).second);
    }
  }
}

TEST_CASE("product-equals-identity criterion") {
  // s_i* s_m s_n* s_j = e iff i = mk and j = nk for some word k
  std::vector<Word> words;
  for (int l = 0; l <= 3; ++l) {
    for (const Word& w : enumerate_words(l)) {
      words.push_back(w);
    }
  }
  auto has_shared_tail = [](const Word& i, const Word& m, const Word& j, const Word& n) {
    if (i.size() < m.size() || j.size() < n.size()) {
      return false;
    }
    if (!is_prefix(m, i) || !is_prefix(n, j)) {
      return false;
    }
    const Word ki(i.begin() + static_cast<std::ptrdiff_t>(m.size()), i.end());
    const Word kj(j.begin() + static_cast<std::ptrdiff_t>(n.size()), j.end());
    return ki == kj;
  };
  for (const Word& i : words) {
    for (const Word& m : words) {
      for (const Word& n : words) {
        for (const Word& j : words) {
          const CuElement product =
              mul(CuElement::pair(Word{}, i),
                  mul(CuElement::pair(m, n), CuElement::pair(j, Word{})));
          const bool is_e = !product.is_diamond() && product == CuElement::identity();
          CHECK(is_e == has_shared_tail(i, m, j, n));
        }
      }
    }
  }
}

TEST_CASE("to_string") {
  CHECK(CuElement::identity().to_string() == "e");
  CHECK(CuElement::pair(Word{1, 2}, Word{1}).to_string() == "s(1,2) s(1)*");
  CHECK(CuElement::gen_star(2).to_string() == "s(2)*");
  CHECK(CuElement::gen(1).to_string() == "s(1)");
  CHECK(CuElement::diamond().to_string() == "diamond");
}
