#include "functional.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace cu2 {

namespace {

mpq_class dyadic(int alpha) {
  mpq_class q(1, 1);
  q /= (mpz_class(1) << alpha);
  return q;
}

CuElement expand_by_letter(const CuElement& t, Letter l) {
  return CuElement::pair(concat(t.left(), Word{l}), concat(t.right(), Word{l}));
}

}  // namespace

Scalar mu_eval(const std::set<Word>& F, const CuElement& t) {
  if (F.count(Word{}) != 0) {
    throw std::invalid_argument("mu_eval: F must not contain the empty word");
  }
  if (t.is_diamond()) {
    throw std::invalid_argument("mu_eval: Diamond rejected");
  }
  const Word& i = t.left();
  const Word& j = t.right();
  // t = s_i s_(kj)* forces |k| = |right| - |left|; the prefix of that
  // length is the only possible k, so alpha is unique.
  if (j.size() < i.size()) {
    return Scalar::zero();
  }
  const std::size_t klen = j.size() - i.size();
  Word k(j.begin(), j.begin() + static_cast<std::ptrdiff_t>(klen));
  if (F.count(k) == 0) {
    return Scalar::zero();
  }
  return Scalar(dyadic(static_cast<int>(i.size())), 0);
}

Scalar tau_eval(const CuElement& t) {
  if (t.is_diamond()) {
    throw std::invalid_argument("tau_eval: Diamond rejected");
  }
  const Word& a = t.left();
  const Word& b = t.right();
  if (a.size() == b.size() + 1 && a.back() == 1 &&
      std::equal(b.begin(), b.end(), a.begin())) {
    return Scalar::one();
  }
  return Scalar::zero();
}

Functional Functional::mu(std::set<Word> F) {
  if (F.count(Word{}) != 0) {
    throw std::invalid_argument("Functional::mu: F must not contain the empty word");
  }
  for (const Word& w : F) {
    validate_word(w);
  }
  Functional phi;
  phi.kind_ = Kind::MuF;
  phi.mu_words_ = std::move(F);
  phi.sup_bound_ = 1.0;
  return phi;
}

Functional Functional::tau() {
  Functional phi;
  phi.kind_ = Kind::TraceTau;
  phi.sup_bound_ = 1.0;
  return phi;
}

Functional Functional::finite_support(AlgElement coefficients) {
  Functional phi;
  phi.kind_ = Kind::FiniteSupport;
  double bound = 0.0;
  for (const auto& [t, c] : coefficients.terms()) {
    bound = std::max(bound, c.abs());
  }
  phi.finite_terms_ = std::move(coefficients);
  phi.sup_bound_ = bound;
  return phi;
}

Scalar Functional::eval(const CuElement& t) const {
  switch (kind_) {
    case Kind::MuF:
      return mu_eval(mu_words_, t);
    case Kind::TraceTau:
      return tau_eval(t);
    case Kind::FiniteSupport:
      return finite_terms_.coeff(t);
    case Kind::PulledBack:
      return inner_->eval(expand_by_letter(t, 1)) + inner_->eval(expand_by_letter(t, 2));
  }
  throw InternalError("Functional::eval: bad kind");
}

std::string Functional::describe() const {
  switch (kind_) {
    case Kind::MuF: {
      std::string s = "mu:";
      bool first = true;
      for (const Word& w : mu_words_) {
        if (!first) {
          s.push_back(',');
        }
        s += word_digits(w);
        first = false;
      }
      return s;
    }
    case Kind::TraceTau:
      return "tau";
    case Kind::FiniteSupport:
      return "finite-support";
    case Kind::PulledBack:
      return "Tstar(" + inner_->describe() + ")";
  }
  return "?";
}

Scalar pair(const AlgElement& f, const Functional& phi) {
  Scalar sum;
  for (const auto& [t, c] : f.terms()) {
    sum += c * phi.eval(t);
  }
  return sum;
}

AlgElement push_T(const AlgElement& f) {
  AlgElement out;
  for (const auto& [t, c] : f.terms()) {
    out.add_term(expand_by_letter(t, 1), c);
    out.add_term(expand_by_letter(t, 2), c);
  }
  return out;
}

Functional pull_Tstar(const Functional& phi) {
  Functional out;
  out.kind_ = Functional::Kind::PulledBack;
  out.inner_ = std::make_shared<Functional>(phi);
  double bound = 2.0 * phi.sup_bound();
  // tightening scan at small length; the doubled bound stays the cap
  double observed = 0.0;
  for (const CuElement& t : enumerate_elements(6)) {
    observed = std::max(observed, out.eval(t).abs());
  }
  out.sup_bound_ = std::min(bound, std::max(observed, phi.sup_bound()));
  return out;
}

bool is_Tstar_fixed(const Functional& phi, int max_length, CuElement* counterexample) {
  if (max_length < 0) {
    throw std::invalid_argument("is_Tstar_fixed: negative length");
  }
  for (const CuElement& t : enumerate_elements(max_length)) {
    Scalar pulled = phi.eval(expand_by_letter(t, 1)) + phi.eval(expand_by_letter(t, 2));
    if (pulled != phi.eval(t)) {
      if (counterexample != nullptr) {
        *counterexample = t;
      }
      return false;
    }
  }
  return true;
}

double quotient_norm_lower(const AlgElement& f, const Functional& phi, int max_length) {
  if (f.is_zero()) {
    return 0.0;
  }
  if (max_length < f.max_support_length() + 1) {
    throw std::invalid_argument(
        "quotient_norm_lower: check length must exceed the support length");
  }
  CuElement bad;
  if (!is_Tstar_fixed(phi, max_length, &bad)) {
    throw std::invalid_argument(
        "quotient_norm_lower: functional fails the fixed-point check at " +
        bad.to_string());
  }
  if (phi.sup_bound() <= 0.0) {
    return 0.0;
  }
  return pair(f, phi).abs() / phi.sup_bound();
}

bool Report::all_passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) {
      return false;
    }
  }
  return true;
}

Report trace_checks(const Functional& phi, int max_length) {
  Report report;
  const auto elements = enumerate_elements(max_length);
  const std::string range = "length<=" + std::to_string(max_length);

  CheckResult trace_prop{"trace_property", range, true, std::nullopt, std::nullopt};
  for (const CuElement& u : elements) {
    for (const CuElement& v : elements) {
      const CuElement uv = mul(u, v);
      const CuElement vu = mul(v, u);
      const Scalar lhs = uv.is_diamond() ? Scalar::zero() : phi.eval(uv);
      const Scalar rhs = vu.is_diamond() ? Scalar::zero() : phi.eval(vu);
      if (lhs != rhs) {
        trace_prop.passed = false;
        trace_prop.counterexample = "u=" + u.to_string() + " v=" + v.to_string();
        break;
      }
    }
    if (!trace_prop.passed) {
      break;
    }
  }
  report.checks.push_back(std::move(trace_prop));

  Scalar at_identity = phi.eval(CuElement::identity());
  CheckResult unit{"identity_value", "e", at_identity.is_zero(), std::nullopt,
                   at_identity.re_string() + (at_identity.is_real()
                                                  ? std::string{}
                                                  : "+" + at_identity.im_string() + "i")};
  report.checks.push_back(std::move(unit));

  CheckResult nonzero{"nonzero_at_finite_stage", range, false, std::nullopt,
                      std::nullopt};
  for (const CuElement& t : elements) {
    if (!phi.eval(t).is_zero()) {
      nonzero.passed = true;
      nonzero.value = "witness " + t.to_string();
      break;
    }
  }
  report.checks.push_back(std::move(nonzero));

  CheckResult annihilation{"ideal_generator_pairing", range, true, std::nullopt,
                           std::nullopt};
  const AlgElement projection = f0();
  std::vector<Word> words;
  for (int l = 0; l <= max_length; ++l) {
    for (const Word& w : enumerate_words(l)) {
      words.push_back(w);
    }
  }
  for (const Word& i : words) {
    for (const Word& j : words) {
      AlgElement gen = sharp(delta(CuElement::pair(i, Word{})),
                             sharp(projection, delta(CuElement::pair(Word{}, j))));
      if (!pair(gen, phi).is_zero()) {
        annihilation.passed = false;
        annihilation.counterexample = "i=" + word_digits(i) + " j=" + word_digits(j);
        break;
      }
    }
    if (!annihilation.passed) {
      break;
    }
  }
  report.checks.push_back(std::move(annihilation));
  return report;
}

}  // namespace cu2
