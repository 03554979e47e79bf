#ifndef CU2_FUNCTIONAL_HPP
#define CU2_FUNCTIONAL_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace cu2 {

/// Value of the norm-certificate functional mu_F at t: 2^(-a) when
/// t = s_i s_(kj)* with |i| = |j| = a and k in F, else 0. F must not
/// contain the empty word.
Scalar mu_eval(const std::set<Word>& F, const CuElement& t);

/// Value of the trace functional at t: 1 when t = s_(i1) s_i* for some
/// word i, else 0.
Scalar tau_eval(const CuElement& t);

/// A bounded functional on the algebra, represented as a total
/// evaluation rule together with a sup bound on its values. Rules are
/// lazy; mu_F and tau have infinite support and are never materialized.
class Functional {
 public:
  enum class Kind { MuF, TraceTau, FiniteSupport, PulledBack };

  static Functional mu(std::set<Word> F);
  static Functional tau();
  /// Functional supported on finitely many elements, with the given
  /// coefficients (the l^infty dual vector of an algebra element).
  static Functional finite_support(AlgElement coefficients);

  Kind kind() const { return kind_; }
  Scalar eval(const CuElement& t) const;
  double sup_bound() const { return sup_bound_; }

  /// Human-readable spec string, e.g. "tau" or "mu:1,21".
  std::string describe() const;

  friend Functional pull_Tstar(const Functional& phi);

 private:
  Functional() = default;

  Kind kind_ = Kind::TraceTau;
  double sup_bound_ = 1.0;
  std::set<Word> mu_words_;
  AlgElement finite_terms_;
  std::shared_ptr<const Functional> inner_;  // PulledBack only
};

/// Dual pairing sum_t f(t) * phi(t) over the support of f.
Scalar pair(const AlgElement& f, const Functional& phi);

/// The expansion operator T = T_1 + T_2 with T_k delta_{s_i s_j*} =
/// delta_{s_(ik) s_(jk)*}; each T_k is an isometry, so ||Tf|| <= 2||f||.
AlgElement push_T(const AlgElement& f);

/// Adjoint action on rules: (T* phi)(t) = phi(t.1) + phi(t.2). The sup
/// bound doubles, then a bounded scan tightens it back where possible.
Functional pull_Tstar(const Functional& phi);

/// Finite-stage check of the fixed-point equation T* phi = phi on all
/// elements of length <= max_length; membership of phi in the annihilator
/// of the ideal is certified only up to that length.
bool is_Tstar_fixed(const Functional& phi, int max_length,
                    CuElement* counterexample = nullptr);

/// Certified lower bound |<f, phi>| / sup_bound for the quotient norm of
/// the image of f. Requires phi to pass the fixed-point check at
/// max_length, which must be at least max_support_length(f) + 1.
double quotient_norm_lower(const AlgElement& f, const Functional& phi, int max_length);

struct CheckResult {
  std::string check;
  std::string range;
  bool passed = false;
  std::optional<std::string> counterexample;
  std::optional<std::string> value;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Trace diagnostics: the trace identity phi(uv) = phi(vu) over all
/// non-Diamond pairs of length <= max_length (Diamond products count as
/// 0), the value at the identity, and annihilation of the ideal
/// generators with words of length <= max_length.
Report trace_checks(const Functional& phi, int max_length);

}  // namespace cu2

#endif
