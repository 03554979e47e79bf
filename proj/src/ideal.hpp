#ifndef CU2_IDEAL_HPP
#define CU2_IDEAL_HPP

#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace cu2 {

/// True iff every branch-wise partial sum of f over the symmetric
/// expansions of v vanishes. Decided finitely: past the deepest suffix of
/// supp(f) in the class of v the partial sums are constant, so it is
/// enough to check every chain down to that depth.
bool zero_sums_at(const AlgElement& f, const CuElement& v);

/// Restriction of f to the symmetric-expansion class of v; v must be
/// without symmetric core.
AlgElement symmetric_class_part(const AlgElement& f, const CuElement& v);

/// The coreless representatives of the classes meeting supp(f), in
/// canonical order.
std::vector<CuElement> support_classes(const AlgElement& f);

/// Membership in the closed ideal generated by f0: zero sums at every
/// coreless class representative meeting the support.
bool in_ideal(const AlgElement& f);

/// One generator multiple c * delta_{s_(im)} # f0 # delta_{s_(jm)*},
/// which expands to c * (delta_{v_m} - delta_{v_m1} - delta_{v_m2}) in
/// the class of v = s_i s_j*.
struct CertificateTerm {
  Word i;
  Word j;
  Word m;
  Scalar c;
};

struct IdealCertificate {
  /// The classes the decomposition walked, with the chain depth used.
  struct ClassTrace {
    CuElement v;
    int depth = 0;
  };

  std::vector<CertificateTerm> terms;
  std::vector<ClassTrace> classes;

  /// Sums the expanded generator multiples; equals the certified element.
  AlgElement expand() const;
};

/// Writes an ideal element exactly as a finite combination of the
/// generators of the ideal. Throws NotInIdealError when in_ideal fails.
/// The expansion is re-checked against f before returning.
IdealCertificate ideal_certificate(const AlgElement& f);

/// delta_{s_m*} # f # delta_{s_m}. The coefficient of e in the result is
/// the partial sum of f over the symmetric chain below e cut at |m|.
AlgElement conjugate_branch(const AlgElement& f, const Word& m);

/// A constructive proof that the identity factors through f modulo the
/// ideal: g # f # h = delta_e exactly, with the search data that led to
/// the witness.
struct FactorizationWitness {
  AlgElement g;
  AlgElement h;
  double cost;  // l1_norm(g) * l1_norm(h)

  // search trace
  CuElement class_v;  // coreless class where zero sums fail
  Word branch;        // conjugating branch word n_M
  Scalar z;           // the stabilized branch sum
  Word elimination;   // word p appended by the support-elimination loop
};

/// Produces a factorization witness for a non-ideal element; see the
/// comments in the implementation for the staging. Throws
/// ZeroElementError / InIdealError when no witness can exist.
FactorizationWitness factorize_identity(const AlgElement& f);

/// l1_norm(g) * l1_norm(h) of the found witness; an upper bound for the
/// pure-infiniteness cost of the image of f in the quotient.
double cpi_upper_bound(const AlgElement& f);

}  // namespace cu2

#endif
