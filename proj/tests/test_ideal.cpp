#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideal.hpp"
#include "oracles.hpp"

using namespace cu2;

namespace {
const CuElement e = CuElement::identity();
}

TEST_CASE("zero_sums_at pinned cases") {
  CHECK(zero_sums_at(f0(), e));
  CHECK_FALSE(zero_sums_at(delta(CuElement::pair(Word{1}, Word{1})), e));
  CHECK(zero_sums_at(delta(CuElement::gen(1)), e));  // s_1 is not in the class of e
  CHECK_THROWS_AS(zero_sums_at(f0(), CuElement::diamond()), std::invalid_argument);
}

TEST_CASE("symmetric_class_part") {
  CHECK(symmetric_class_part(f0(), e) == f0());
  const AlgElement f = delta(CuElement::gen(1)) + delta(e);
  CHECK(symmetric_class_part(f, e) == delta(e));
  CHECK_THROWS_AS(symmetric_class_part(f, CuElement::pair(Word{1}, Word{1})),
                  std::invalid_argument);
}

TEST_CASE("class parts partition a random element") {
  testing::Rand rand(23);
  for (int k = 0; k < 20; ++k) {
    const AlgElement f = rand.alg_element(8, 3, true);
    AlgElement sum;
    for (const CuElement& v : support_classes(f)) {
      sum = sum + symmetric_class_part(f, v);
    }
    CHECK(sum == f);
  }
}

TEST_CASE("in_ideal pinned cases") {
  CHECK(in_ideal(f0()));
  CHECK_FALSE(in_ideal(delta(e)));
  CHECK(in_ideal(sharp(delta(CuElement::gen(1)),
                       sharp(f0(), delta(CuElement::gen_star(2))))));
}

TEST_CASE("in_ideal behaves like a two-sided ideal on test data") {
  testing::Rand rand(29);
  for (int k = 0; k < 25; ++k) {
    const AlgElement f = rand.ideal_element(3, 3);
    const AlgElement g = rand.ideal_element(3, 3);
    CHECK(in_ideal(f));
    CHECK(in_ideal(f + g));
    CHECK(in_ideal(f.scaled(rand.nonzero_scalar(true))));
    const AlgElement a = rand.alg_element(4, 2, true);
    const AlgElement b = rand.alg_element(4, 2, true);
    CHECK(in_ideal(sharp(a, sharp(f, b))));
  }
}

TEST_CASE("four-word generators of the ideal pass membership") {
  testing::Rand rand(31);
  for (int k = 0; k < 25; ++k) {
    const AlgElement gen = sharp(
        delta(CuElement::pair(rand.word(2), rand.word(2))),
        sharp(f0(), delta(CuElement::pair(rand.word(2), rand.word(2)))));
    CHECK(in_ideal(gen));
  }
}

TEST_CASE("ideal_certificate pinned cases") {
  const IdealCertificate cert = ideal_certificate(f0());
  REQUIRE(cert.terms.size() == 1);
  CHECK(cert.terms[0].i == Word{});
  CHECK(cert.terms[0].j == Word{});
  CHECK(cert.terms[0].m == Word{});
  CHECK(cert.terms[0].c == Scalar::one());

  // two-layer telescoping: delta_v minus the four depth-2 expansions
  AlgElement f = delta(e);
  for (const Word& w : enumerate_words(2)) {
    f.add_term(CuElement::pair(w, w), -Scalar::one());
  }
  const IdealCertificate two = ideal_certificate(f);
  REQUIRE(two.terms.size() == 3);
  CHECK(two.terms[0].m == Word{});
  CHECK(two.terms[1].m == Word{1});
  CHECK(two.terms[2].m == Word{2});
  for (const CertificateTerm& term : two.terms) {
    CHECK(term.c == Scalar::one());
  }
  CHECK(two.expand() == f);

  CHECK(ideal_certificate(AlgElement{}).terms.empty());
  CHECK_THROWS_AS(ideal_certificate(delta(e)), NotInIdealError);
}

TEST_CASE("ideal_certificate round-trips random ideal elements") {
  testing::Rand rand(37);
  for (int k = 0; k < 100; ++k) {
    const AlgElement f = rand.ideal_element(5, 3);
    REQUIRE(in_ideal(f));
    const IdealCertificate cert = ideal_certificate(f);
    CHECK(cert.expand() == f);
  }
}

TEST_CASE("conjugate_branch") {
  CHECK(conjugate_branch(f0(), Word{1}).is_zero());
  testing::Rand rand(41);
  for (int k = 0; k < 20; ++k) {
    const AlgElement f = rand.alg_element(6, 3, true);
    const Word m = rand.word(4);
    CHECK(conjugate_branch(delta(e), m) == delta(e));
    // identity coefficient equals the partial sum over the symmetric chain
    Scalar expected;
    for (std::size_t l = 0; l <= m.size(); ++l) {
      const Word prefix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(l));
      expected += f.coeff(CuElement::pair(prefix, prefix));
    }
    CHECK(conjugate_branch(f, m).coeff(e) == expected);
  }
}

TEST_CASE("factorize_identity pinned cases") {
  FactorizationWitness w = factorize_identity(delta(CuElement::pair(Word{1}, Word{1})));
  CHECK(w.g == delta(CuElement::gen_star(1)));
  CHECK(w.h == delta(CuElement::gen(1)));
  CHECK(w.cost == 1.0);

  w = factorize_identity(delta(e));
  CHECK(w.g == delta(e));
  CHECK(w.h == delta(e));
  CHECK(w.cost == 1.0);

  CHECK_THROWS_AS(factorize_identity(f0()), InIdealError);
  CHECK_THROWS_AS(factorize_identity(AlgElement{}), ZeroElementError);
}

TEST_CASE("factorize_identity runs the elimination loop when conjugation leaves residue") {
  // delta_e + delta_{s_1}: conjugating along the branch (1) fixes s_1, so
  // the support has to be stripped with the letter 2
  const AlgElement f = delta(e) + delta(CuElement::gen(1));
  const FactorizationWitness w = factorize_identity(f);
  CHECK(w.class_v == e);
  CHECK(w.branch == Word{1});
  CHECK(w.z == Scalar::one());
  CHECK(w.elimination == Word{2});
  CHECK(w.g == delta(CuElement::pair(Word{}, Word{1, 2})));
  CHECK(w.h == delta(CuElement::pair(Word{1, 2}, Word{})));
  CHECK(sharp(w.g, sharp(f, w.h)) == delta(e));
}

TEST_CASE("factorize_identity produces exact witnesses on random elements") {
  testing::Rand rand(43);
  int produced = 0;
  while (produced < 100) {
    const AlgElement f = rand.alg_element(6, 3, true);
    if (f.is_zero() || in_ideal(f)) {
      continue;
    }
    ++produced;
    const FactorizationWitness w = factorize_identity(f);
    CHECK(sharp(w.g, sharp(f, w.h)) == delta(e));
    CHECK(w.cost >= 1.0 / l1_norm(f) * (1.0 - 1e-12));
  }
}

TEST_CASE("cpi_upper_bound") {
  CHECK(cpi_upper_bound(delta(e)) == 1.0);
  CHECK(cpi_upper_bound(delta(CuElement::pair(Word{1}, Word{1}))) == 1.0);
  testing::Rand rand(47);
  for (int k = 0; k < 20; ++k) {
    const AlgElement f = rand.alg_element(5, 2, true);
    if (f.is_zero() || in_ideal(f)) {
      continue;
    }
    CHECK(cpi_upper_bound(f) >= 1.0 / l1_norm(f) * (1.0 - 1e-12));
  }
}
