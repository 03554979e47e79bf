#ifndef CU2_ALGEBRA_HPP
#define CU2_ALGEBRA_HPP

#include <map>
#include <optional>

#include "scalar.hpp"
#include "semigroup.hpp"

namespace cu2 {

/// A finitely supported element of the semigroup algebra
/// l^1(Cu_2 \ {d}, #): a map from canonical non-Diamond elements to
/// Gaussian-rational coefficients. Zero coefficients are never stored,
/// so equality is term-wise map equality.
class AlgElement {
 public:
  using TermMap = std::map<CuElement, Scalar>;

  AlgElement() = default;

  /// Adds c * delta_t; erases the term if the sum cancels.
  void add_term(const CuElement& t, const Scalar& c);

  const Scalar& coeff(const CuElement& t) const;
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  /// Longest length(t) over the support; 0 for the zero element.
  int max_support_length() const;

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator-() const;
  AlgElement scaled(const Scalar& c) const;

  bool operator==(const AlgElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }

 private:
  TermMap terms_;
};

/// Basis vector delta_t; rejects Diamond.
AlgElement delta(const CuElement& t);

/// The projection delta_e - delta_{s1 s1*} - delta_{s2 s2*} that
/// generates the maximal ideal.
AlgElement f0();

/// The convolution-like product: delta_s # delta_t = delta_{st}, or 0
/// when the semigroup product hits Diamond; extended bilinearly.
AlgElement sharp(const AlgElement& f, const AlgElement& g);

/// f*(t) = conj(f(t*)); isometric algebra anti-homomorphism.
AlgElement involution(const AlgElement& f);

/// Sum of coefficient moduli (floating point).
double l1_norm(const AlgElement& f);

/// Exact l1 norm, defined when every coefficient is real.
std::optional<mpq_class> l1_norm_exact(const AlgElement& f);

}  // namespace cu2

#endif
