// Acceptance suite: one criterion per section, one pass/fail line each.
// Everything tagged "exact" compares Gaussian-rational values with no
// tolerance; floating-point comparisons state their tolerance inline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "expr.hpp"
#include "functional.hpp"
#include "ideal.hpp"
#include "oracles.hpp"
#include "rep.hpp"

using namespace cu2;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& message) { g_notes.push_back(message); }

void run_criterion(int number, const std::string& label,
                   const std::function<bool()>& body) {
  g_notes.clear();
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d: %s  (%s, %.2fs)\n", number, ok ? "PASS" : "FAIL",
              label.c_str(), seconds);
  if (!ok) {
    ++g_failures;
    for (const std::string& message : g_notes) {
      std::printf("    %s\n", message.c_str());
    }
  }
}

const CuElement e = CuElement::identity();

std::vector<Word> words_up_to(int max_length) {
  std::vector<Word> out;
  for (int l = 0; l <= max_length; ++l) {
    for (const Word& w : enumerate_words(l)) {
      out.push_back(w);
    }
  }
  return out;
}

std::set<Word> word_set(std::initializer_list<int> lengths) {
  std::set<Word> out;
  for (int l : lengths) {
    for (const Word& w : enumerate_words(l)) {
      out.insert(w);
    }
  }
  return out;
}

// 1. mul agrees with the letter-rewriting oracle on all pairs of length
//    <= 4; associativity exhaustive at length <= 2. Exact.
bool criterion_semigroup_oracle() {
  const auto elements = enumerate_elements(4);
  for (const CuElement& u : elements) {
    for (const CuElement& v : elements) {
      if (mul(u, v) != testing::mul_oracle(u, v)) {
        note("oracle mismatch at " + u.to_string() + " * " + v.to_string());
        return false;
      }
    }
  }
  const auto short_elements = enumerate_elements(2);
  for (const CuElement& u : short_elements) {
    for (const CuElement& v : short_elements) {
      for (const CuElement& w : short_elements) {
        if (mul(mul(u, v), w) != mul(u, mul(v, w))) {
          note("associativity fails at " + u.to_string() + ", " + v.to_string() +
               ", " + w.to_string());
          return false;
        }
      }
    }
  }
  return true;
}

// 2. Partition: every element of length <= 8 has exactly one coreless
//    representative; expansion sets of distinct coreless elements of
//    length <= 4 are disjoint. Exact.
bool criterion_partition() {
  for (const CuElement& t : enumerate_elements(8)) {
    const auto [v, k] = symmetric_core(t);
    if (!is_without_symmetric_core(v)) {
      note("core of " + t.to_string() + " is not coreless");
      return false;
    }
    if (t != CuElement::pair(concat(v.left(), k), concat(v.right(), k))) {
      note("core decomposition does not reassemble " + t.to_string());
      return false;
    }
  }
  std::set<CuElement> seen;
  for (const CuElement& v : enumerate_elements(4)) {
    if (!is_without_symmetric_core(v)) {
      continue;
    }
    for (const CuElement& t : expansions(v, 4)) {
      if (!seen.insert(t).second) {
        note("expansion sets overlap at " + t.to_string());
        return false;
      }
    }
  }
  return true;
}

// 3. Defect-projection identities: idempotent, self-adjoint, and
//    annihilated by starred/plain generator words of length <= 4. Exact.
bool criterion_f0_identities() {
  const AlgElement proj = f0();
  if (sharp(proj, proj) != proj) {
    note("projection is not idempotent");
    return false;
  }
  if (involution(proj) != proj) {
    note("projection is not self-adjoint");
    return false;
  }
  for (int l = 1; l <= 4; ++l) {
    for (const Word& k : enumerate_words(l)) {
      if (!sharp(delta(CuElement::pair(Word{}, k)), proj).is_zero()) {
        note("delta_{s_k*} # f0 != 0 at k=" + word_digits(k));
        return false;
      }
      if (!sharp(proj, delta(CuElement::pair(k, Word{}))).is_zero()) {
        note("f0 # delta_{s_k} != 0 at k=" + word_digits(k));
        return false;
      }
    }
  }
  return true;
}

// 4. Membership and certificates: 100 random ideal combinations round-trip
//    exactly; 100 random non-ideal elements factorize exactly with cost
//    >= 1/||f||. Exact.
bool criterion_membership_certificates() {
  testing::Rand rand(2024);
  for (int k = 0; k < 100; ++k) {
    const AlgElement f = rand.ideal_element(5, 3);
    if (!in_ideal(f)) {
      note("generator combination escaped the ideal");
      return false;
    }
    if (ideal_certificate(f).expand() != f) {
      note("certificate expansion mismatch");
      return false;
    }
  }
  int produced = 0;
  while (produced < 100) {
    const AlgElement f = rand.alg_element(6, 3, true);
    if (f.is_zero() || in_ideal(f)) {
      continue;
    }
    ++produced;
    const FactorizationWitness w = factorize_identity(f);
    if (sharp(w.g, sharp(f, w.h)) != delta(e)) {
      note("witness fails g # f # h = delta_e");
      return false;
    }
    if (w.cost < 1.0 / l1_norm(f) * (1.0 - 1e-12)) {
      note("witness cost below the trivial lower bound");
      return false;
    }
  }
  return true;
}

// 5. Quotient-norm reproduction: for every F in I_2 u I_3 with |F| <= 8,
//    the certified lower bound and the l1 upper bound agree at |F|.
//    Tolerance 0.
bool criterion_quotient_norm() {
  std::vector<Word> pool;
  for (const Word& w : enumerate_words(2)) {
    pool.push_back(w);
  }
  for (const Word& w : enumerate_words(3)) {
    pool.push_back(w);
  }
  std::vector<std::set<Word>> subsets = {{}};
  for (const Word& w : pool) {
    const std::size_t count = subsets.size();
    for (std::size_t k = 0; k < count; ++k) {
      if (subsets[k].size() < 8) {
        std::set<Word> extended = subsets[k];
        extended.insert(w);
        subsets.push_back(std::move(extended));
      }
    }
  }
  for (const std::set<Word>& F : subsets) {
    if (F.empty()) {
      continue;
    }
    AlgElement f;
    for (const Word& w : F) {
      f.add_term(CuElement::pair(Word{}, w), Scalar::one());
    }
    const double expected = static_cast<double>(F.size());
    const double lower = quotient_norm_lower(f, Functional::mu(F), 4);
    if (lower != expected) {
      note("lower bound " + std::to_string(lower) + " != |F| = " +
           std::to_string(expected));
      return false;
    }
    if (*l1_norm_exact(f) != mpq_class(static_cast<long>(F.size()))) {
      note("l1 norm does not match |F|");
      return false;
    }
  }
  return true;
}

// 6. Adjoint fixed points: every mu_F with F in I_1 u I_2 and the trace
//    rule agree with their pullbacks on all elements of length <= 8. Exact.
bool criterion_tstar_fixed() {
  std::vector<Word> pool;
  for (const Word& w : enumerate_words(1)) {
    pool.push_back(w);
  }
  for (const Word& w : enumerate_words(2)) {
    pool.push_back(w);
  }
  std::vector<std::set<Word>> subsets = {{}};
  for (const Word& w : pool) {
    const std::size_t count = subsets.size();
    for (std::size_t k = 0; k < count; ++k) {
      std::set<Word> extended = subsets[k];
      extended.insert(w);
      subsets.push_back(std::move(extended));
    }
  }
  for (const std::set<Word>& F : subsets) {
    if (F.empty()) {
      continue;
    }
    if (!is_Tstar_fixed(Functional::mu(F), 8)) {
      note("mu functional fails the fixed-point check");
      return false;
    }
  }
  if (!is_Tstar_fixed(Functional::tau(), 8)) {
    note("trace rule fails the fixed-point check");
    return false;
  }
  return true;
}

// 7. Trace suite: trace identity exhaustive at length <= 4 (Diamond
//    products count 0), value 0 at e, value 1 at s_1, annihilation of
//    generators with words <= 3. Exact.
bool criterion_trace() {
  const Functional tau = Functional::tau();
  const auto elements = enumerate_elements(4);
  for (const CuElement& u : elements) {
    for (const CuElement& v : elements) {
      const CuElement uv = mul(u, v);
      const CuElement vu = mul(v, u);
      const Scalar lhs = uv.is_diamond() ? Scalar::zero() : tau_eval(uv);
      const Scalar rhs = vu.is_diamond() ? Scalar::zero() : tau_eval(vu);
      if (lhs != rhs) {
        note("trace identity fails at u=" + u.to_string() + " v=" + v.to_string());
        return false;
      }
    }
  }
  if (tau_eval(e) != Scalar::zero()) {
    note("tau(e) != 0");
    return false;
  }
  if (tau_eval(CuElement::gen(1)) != Scalar::one()) {
    note("tau(s_1) != 1");
    return false;
  }
  for (const Word& i : words_up_to(3)) {
    for (const Word& j : words_up_to(3)) {
      const AlgElement gen = sharp(delta(CuElement::pair(i, Word{})),
                                   sharp(f0(), delta(CuElement::pair(Word{}, j))));
      if (pair(gen, tau) != Scalar::zero()) {
        note("tau does not annihilate the generator at i=" + word_digits(i) +
             " j=" + word_digits(j));
        return false;
      }
    }
  }
  return true;
}

// 8. Representation relations on e_n for n <= 1000 (exact index
//    arithmetic); ideal elements act as zero on n <= 64; homomorphism
//    spot-check at tolerance 1e-12.
bool criterion_rep_relations() {
  const RepConfig cfg{1.0};
  const Report relations = check_relations(1000, cfg);
  if (!relations.all_passed()) {
    note("one of the five operator relations fails");
    return false;
  }
  testing::Rand rand(4096);
  for (int k = 0; k < 100; ++k) {
    const AlgElement j = rand.ideal_element(3, 2);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      if (!apply_element(j, SparseVector::basis(n), cfg).is_zero()) {
        note("ideal element acts non-trivially on e_" + std::to_string(n));
        return false;
      }
    }
  }
  for (int k = 0; k < 50; ++k) {
    const AlgElement f = rand.alg_element(5, 3, true);
    const AlgElement g = rand.alg_element(5, 3, true);
    const std::uint64_t n = static_cast<std::uint64_t>(rand.range(1, 100));
    const SparseVector direct = apply_element(sharp(f, g), SparseVector::basis(n), cfg);
    const SparseVector staged =
        apply_element(f, apply_element(g, SparseVector::basis(n), cfg), cfg);
    const SparseVector diff = direct - staged;
    for (const auto& [idx, v] : diff.entries()) {
      if (std::abs(v) > 1e-12) {
        note("homomorphism defect " + std::to_string(std::abs(v)) + " at index " +
             std::to_string(idx));
        return false;
      }
    }
  }
  return true;
}

// 9. Norm-partition at alpha <= 6 over 20 random vectors and p in
//    {1, 1.5, 2, 3} (relative tolerance 1e-10); isometry/contraction at
//    alpha <= 4 and |j| <= 2.
bool criterion_norm_partition() {
  testing::Rand rand(515);
  std::uniform_int_distribution<std::uint64_t> index(1, 1000000);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  auto random_vector = [&] {
    SparseVector x;
    for (int entry = 0; entry < 20; ++entry) {
      x.add(index(rand.engine()), {value(rand.engine()), value(rand.engine())});
    }
    return x;
  };
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const RepConfig cfg{p};
    for (int trial = 0; trial < 20; ++trial) {
      const SparseVector x = random_vector();
      for (int alpha = 0; alpha <= 6; ++alpha) {
        if (!partition_norm_check(x, alpha, cfg).all_passed()) {
          note("norm partition fails at p=" + std::to_string(p) +
               " alpha=" + std::to_string(alpha));
          return false;
        }
      }
    }
    for (int alpha = 0; alpha <= 4; ++alpha) {
      for (const Word& j : words_up_to(2)) {
        if (!isometry_check(alpha, j, random_vector(), cfg).all_passed()) {
          note("isometry/contraction fails at p=" + std::to_string(p) +
               " alpha=" + std::to_string(alpha) + " j=" + word_digits(j));
          return false;
        }
      }
    }
  }
  return true;
}

// 10. Norm collapse: quotient lower bound exactly 1 for N = 1..12 while
//     the spatial ratio matches 2^(-N/p) within 1e-12, at p = 1 and p = 2.
bool criterion_norm_collapse() {
  for (double p : {1.0, 2.0}) {
    const RepConfig cfg{p};
    const auto rows = norm_collapse_experiment(12, cfg);
    for (const CollapseRow& row : rows) {
      if (row.quotient_lower != 1.0) {
        note("quotient lower bound is not exactly 1 at N=" + std::to_string(row.N) +
             " p=" + std::to_string(p));
        return false;
      }
      const double expected = std::pow(2.0, -static_cast<double>(row.N) / p);
      if (std::abs(row.rep_ratio - expected) > 1e-12) {
        note("spatial ratio misses 2^(-N/p) at N=" + std::to_string(row.N) +
             " p=" + std::to_string(p));
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "semigroup product vs rewriting oracle + associativity",
                criterion_semigroup_oracle);
  run_criterion(2, "symmetric-expansion partition", criterion_partition);
  run_criterion(3, "defect projection identities", criterion_f0_identities);
  run_criterion(4, "membership, certificates, factorization witnesses",
                criterion_membership_certificates);
  run_criterion(5, "quotient norm reproduction |F|", criterion_quotient_norm);
  run_criterion(6, "adjoint fixed points of mu and tau", criterion_tstar_fixed);
  run_criterion(7, "trace suite", criterion_trace);
  run_criterion(8, "spatial relations, kernel, homomorphism", criterion_rep_relations);
  run_criterion(9, "norm partition and isometry lemmas", criterion_norm_partition);
  run_criterion(10, "norm collapse table at p = 1 and p = 2",
                criterion_norm_collapse);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
