#ifndef CU2_SEMIGROUP_HPP
#define CU2_SEMIGROUP_HPP

#include <utility>
#include <vector>

#include "word.hpp"

namespace cu2 {

/// An element of the polycyclic monoid Cu_2 = <s_1, s_2 : s_i* s_i = e,
/// s_1* s_2 = d = s_2* s_1> in its canonical form: either the absorbing
/// zero d (Diamond), or the unique pair of words (i, j) with t = s_i s_j*.
class CuElement {
 public:
  /// Default-constructs the identity e = s_() s_()*.
  CuElement() = default;

  static CuElement diamond();
  static CuElement pair(Word i, Word j);
  static CuElement identity() { return CuElement(); }

  /// Single generators: s_k and s_k* for k in {1,2}.
  static CuElement gen(Letter k);
  static CuElement gen_star(Letter k);

  bool is_diamond() const { return diamond_; }
  bool is_identity() const { return !diamond_ && i_.empty() && j_.empty(); }

  /// The words of the canonical form s_i s_j*. Diamond has neither.
  const Word& left() const;
  const Word& right() const;

  bool operator==(const CuElement& o) const {
    return diamond_ == o.diamond_ && i_ == o.i_ && j_ == o.j_;
  }
  bool operator!=(const CuElement& o) const { return !(*this == o); }

  /// Total order: Diamond first, then by total length, then left word
  /// shortlex, then right word shortlex. Used for all enumerations and
  /// for deterministic term ordering in the algebra.
  bool operator<(const CuElement& o) const;

  /// Renders e, s(1,2), s(1)*, s(1,2)s(2)* etc.
  std::string to_string() const;

 private:
  bool diamond_ = false;
  Word i_;
  Word j_;
};

/// Canonical product. Diamond absorbs; otherwise the middle s_j* s_k
/// collapses by unique suffix comparison.
CuElement mul(const CuElement& u, const CuElement& v);

/// The involution: (s_i s_j*)* = s_j s_i*, Diamond fixed.
CuElement star(const CuElement& u);

/// |i| + |j| of the canonical form. Rejects Diamond.
int length(const CuElement& t);

/// Writes t = s_(ik) s_(jk)* with k the longest common suffix of the two
/// words, and returns (v, k) with v = s_i s_j* without symmetric core.
std::pair<CuElement, Word> symmetric_core(const CuElement& t);

bool is_without_symmetric_core(const CuElement& t);

/// All symmetric expansions s_(ik) s_(jk)* of v over words k with
/// |k| <= depth, ordered by (length, lexicographic).
std::vector<CuElement> expansions(const CuElement& v, int depth);

/// All non-Diamond elements of length <= max_length in canonical order.
std::vector<CuElement> enumerate_elements(int max_length);

}  // namespace cu2

#endif
