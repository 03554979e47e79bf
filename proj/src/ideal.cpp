#include "ideal.hpp"

#include <algorithm>
#include <set>

namespace cu2 {

namespace {

/// Coefficients of f on the expansion chain below v, keyed by the suffix
/// word: suffix k maps to f(s_(ik) s_(jk)*). Only nonzero entries appear.
std::map<Word, Scalar> chain_coefficients(const AlgElement& f, const CuElement& v) {
  std::map<Word, Scalar> out;
  const Word& vi = v.left();
  const Word& vj = v.right();
  for (const auto& [t, c] : f.terms()) {
    const Word& ti = t.left();
    const Word& tj = t.right();
    if (!is_prefix(vi, ti) || !is_prefix(vj, tj)) {
      continue;
    }
    Word ka(ti.begin() + static_cast<std::ptrdiff_t>(vi.size()), ti.end());
    Word kb(tj.begin() + static_cast<std::ptrdiff_t>(vj.size()), tj.end());
    if (ka == kb) {
      out.emplace(std::move(ka), c);
    }
  }
  return out;
}

int max_suffix_depth(const std::map<Word, Scalar>& coeffs) {
  int depth = 0;
  for (const auto& [k, c] : coeffs) {
    depth = std::max(depth, static_cast<int>(k.size()));
  }
  return depth;
}

Scalar chain_sum(const std::map<Word, Scalar>& coeffs, const Word& w) {
  Scalar sum;
  for (std::size_t l = 0; l <= w.size(); ++l) {
    auto it = coeffs.find(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(l)));
    if (it != coeffs.end()) {
      sum += it->second;
    }
  }
  return sum;
}

/// A word is terminal when no stored suffix strictly extends it; along
/// any branch through a terminal word the partial sums are already
/// constant.
bool is_terminal(const std::map<Word, Scalar>& coeffs, const Word& w) {
  for (const auto& [k, c] : coeffs) {
    if (k.size() > w.size() && is_prefix(w, k)) {
      return false;
    }
  }
  return true;
}

AlgElement conjugate_letter(const AlgElement& f, Letter l) {
  return sharp(delta(CuElement::gen_star(l)), sharp(f, delta(CuElement::gen(l))));
}

}  // namespace

bool zero_sums_at(const AlgElement& f, const CuElement& v) {
  if (v.is_diamond()) {
    throw std::invalid_argument("zero_sums_at: Diamond rejected");
  }
  const auto coeffs = chain_coefficients(f, v);
  const int depth = max_suffix_depth(coeffs);
  for (const Word& leaf : enumerate_words(depth)) {
    if (!chain_sum(coeffs, leaf).is_zero()) {
      return false;
    }
  }
  return true;
}

AlgElement symmetric_class_part(const AlgElement& f, const CuElement& v) {
  if (v.is_diamond()) {
    throw std::invalid_argument("symmetric_class_part: Diamond rejected");
  }
  if (!is_without_symmetric_core(v)) {
    throw std::invalid_argument("symmetric_class_part: v has a symmetric core");
  }
  AlgElement out;
  for (const auto& [t, c] : f.terms()) {
    if (symmetric_core(t).first == v) {
      out.add_term(t, c);
    }
  }
  return out;
}

std::vector<CuElement> support_classes(const AlgElement& f) {
  std::set<CuElement> classes;
  for (const auto& [t, c] : f.terms()) {
    classes.insert(symmetric_core(t).first);
  }
  return {classes.begin(), classes.end()};
}

bool in_ideal(const AlgElement& f) {
  for (const CuElement& v : support_classes(f)) {
    if (!zero_sums_at(f, v)) {
      return false;
    }
  }
  return true;
}

AlgElement IdealCertificate::expand() const {
  AlgElement out;
  for (const CertificateTerm& term : terms) {
    const Word im = concat(term.i, term.m);
    const Word jm = concat(term.j, term.m);
    out.add_term(CuElement::pair(im, jm), term.c);
    for (Letter l : {Letter{1}, Letter{2}}) {
      out.add_term(CuElement::pair(concat(im, Word{l}), concat(jm, Word{l})), -term.c);
    }
  }
  return out;
}

IdealCertificate ideal_certificate(const AlgElement& f) {
  if (!in_ideal(f)) {
    throw NotInIdealError("ideal_certificate: element is not in the ideal");
  }
  IdealCertificate cert;
  for (const CuElement& v : support_classes(f)) {
    const auto coeffs = chain_coefficients(f, v);
    const int depth = max_suffix_depth(coeffs);
    cert.classes.push_back({v, depth});
    // The cumulative sums c_m over the chain v..v_m telescope against the
    // generator multiples c_m * (delta_{v_m} - delta_{v_m1} - delta_{v_m2});
    // zero sums at depth `depth` close the last layer.
    for (int d = 0; d < depth; ++d) {
      for (const Word& m : enumerate_words(d)) {
        Scalar c = chain_sum(coeffs, m);
        if (!c.is_zero()) {
          cert.terms.push_back({v.left(), v.right(), m, std::move(c)});
        }
      }
    }
  }
  if (cert.expand() != f) {
    throw InternalError("ideal_certificate: expansion mismatch");
  }
  return cert;
}

AlgElement conjugate_branch(const AlgElement& f, const Word& m) {
  return sharp(delta(CuElement::pair(Word{}, m)), sharp(f, delta(CuElement::pair(m, Word{}))));
}

FactorizationWitness factorize_identity(const AlgElement& f) {
  if (f.is_zero()) {
    throw ZeroElementError("factorize_identity: zero element");
  }

  // Stage 1: locate a coreless class and a terminal chain word with
  // nonzero branch sum, preferring minimal depth and then the canonical
  // class / lexicographic word order.
  struct Candidate {
    CuElement v;
    Word leaf;
    Scalar sum;
    int depth;
  };
  std::optional<Candidate> best;
  for (const CuElement& v : support_classes(f)) {
    const auto coeffs = chain_coefficients(f, v);
    const int depth = max_suffix_depth(coeffs);
    for (int d = 0; d <= depth && !(best && best->depth <= d); ++d) {
      bool found = false;
      for (const Word& w : enumerate_words(d)) {
        Scalar sum = chain_sum(coeffs, w);
        if (!sum.is_zero() && is_terminal(coeffs, w)) {
          best = Candidate{v, w, std::move(sum), d};
          found = true;
          break;
        }
      }
      if (found) {
        break;
      }
    }
  }
  if (!best) {
    throw InIdealError("factorize_identity: element lies in the ideal");
  }

  const CuElement& v = best->v;
  const Scalar z = best->sum;

  // Stage 2: conjugate the class down to the identity.
  AlgElement fbar = sharp(delta(CuElement::pair(Word{}, v.left())),
                          sharp(f, delta(CuElement::pair(v.right(), Word{}))));

  // Stage 3: extend the chain word to branch length M; beyond M the
  // conjugated element cannot reach back to length-2 symmetric elements,
  // which keeps the identity coefficient constant in stage 4.
  const int m_target =
      std::max((fbar.max_support_length() + 1) / 2, static_cast<int>(best->leaf.size()));
  Word branch = best->leaf;
  branch.resize(static_cast<std::size_t>(m_target), Letter{1});

  AlgElement conj = conjugate_branch(fbar, branch);
  if (conj.coeff(CuElement::identity()) != z) {
    throw InternalError("factorize_identity: branch sum mismatch");
  }

  // Stage 4: strip the residual support one letter at a time; each chosen
  // letter annihilates at least one residual term.
  AlgElement residual = conj - delta(CuElement::identity()).scaled(z);
  const std::size_t max_rounds = residual.support_size() + 1;
  Word elimination;
  for (std::size_t round = 0; !residual.is_zero(); ++round) {
    if (round >= max_rounds) {
      throw InternalError("factorize_identity: elimination failed to terminate");
    }
    Letter chosen = 0;
    for (Letter l : {Letter{1}, Letter{2}}) {
      if (conjugate_letter(residual, l).support_size() < residual.support_size()) {
        chosen = l;
        break;
      }
    }
    if (chosen == 0) {
      throw InternalError("factorize_identity: no support-decreasing letter");
    }
    elimination.push_back(chosen);
    conj = conjugate_letter(conj, chosen);
    if (conj.coeff(CuElement::identity()) != z) {
      throw InternalError("factorize_identity: identity coefficient drifted");
    }
    residual = conj - delta(CuElement::identity()).scaled(z);
  }

  const Word tail = concat(branch, elimination);
  FactorizationWitness w;
  w.g = delta(CuElement::pair(Word{}, concat(v.left(), tail))).scaled(z.inverse());
  w.h = delta(CuElement::pair(concat(v.right(), tail), Word{}));
  w.cost = l1_norm(w.g) * l1_norm(w.h);
  w.class_v = v;
  w.branch = branch;
  w.z = z;
  w.elimination = elimination;

  if (sharp(w.g, sharp(f, w.h)) != delta(CuElement::identity())) {
    throw InternalError("factorize_identity: witness verification failed");
  }
  return w;
}

double cpi_upper_bound(const AlgElement& f) {
  return factorize_identity(f).cost;
}

}  // namespace cu2
