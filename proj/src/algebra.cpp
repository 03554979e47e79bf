#include "algebra.hpp"

#include <stdexcept>

namespace cu2 {

namespace {
const Scalar kZeroScalar{};
}

void AlgElement::add_term(const CuElement& t, const Scalar& c) {
  if (t.is_diamond()) {
    throw std::invalid_argument("AlgElement: Diamond carries no coefficient");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

const Scalar& AlgElement::coeff(const CuElement& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? kZeroScalar : it->second;
}

int AlgElement::max_support_length() const {
  int max_len = 0;
  for (const auto& [t, c] : terms_) {
    max_len = std::max(max_len, length(t));
  }
  return max_len;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  AlgElement out = *this;
  for (const auto& [t, c] : o.terms_) {
    out.add_term(t, c);
  }
  return out;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  AlgElement out = *this;
  for (const auto& [t, c] : o.terms_) {
    out.add_term(t, -c);
  }
  return out;
}

AlgElement AlgElement::operator-() const {
  AlgElement out;
  for (const auto& [t, c] : terms_) {
    out.add_term(t, -c);
  }
  return out;
}

AlgElement AlgElement::scaled(const Scalar& c) const {
  AlgElement out;
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [t, coeff] : terms_) {
    out.add_term(t, coeff * c);
  }
  return out;
}

AlgElement delta(const CuElement& t) {
  if (t.is_diamond()) {
    throw std::invalid_argument("delta: Diamond rejected");
  }
  AlgElement f;
  f.add_term(t, Scalar::one());
  return f;
}

AlgElement f0() {
  AlgElement f;
  f.add_term(CuElement::identity(), Scalar::one());
  f.add_term(CuElement::pair(Word{1}, Word{1}), -Scalar::one());
  f.add_term(CuElement::pair(Word{2}, Word{2}), -Scalar::one());
  return f;
}

AlgElement sharp(const AlgElement& f, const AlgElement& g) {
  AlgElement out;
  for (const auto& [s, c] : f.terms()) {
    for (const auto& [t, d] : g.terms()) {
      CuElement st = mul(s, t);
      if (!st.is_diamond()) {
        out.add_term(st, c * d);
      }
    }
  }
  return out;
}

AlgElement involution(const AlgElement& f) {
  AlgElement out;
  for (const auto& [t, c] : f.terms()) {
    out.add_term(star(t), c.conj());
  }
  return out;
}

double l1_norm(const AlgElement& f) {
  double sum = 0.0;
  for (const auto& [t, c] : f.terms()) {
    sum += c.abs();
  }
  return sum;
}

std::optional<mpq_class> l1_norm_exact(const AlgElement& f) {
  mpq_class sum = 0;
  for (const auto& [t, c] : f.terms()) {
    if (!c.is_real()) {
      return std::nullopt;
    }
    sum += c.abs_real();
  }
  return sum;
}

}  // namespace cu2
