#ifndef CU2_REP_HPP
#define CU2_REP_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "algebra.hpp"
#include "functional.hpp"

namespace cu2 {

struct RepConfig {
  double p = 1.0;  // exponent of the sequence space, p >= 1
};

/// A finitely supported vector in the sequence space: positive indices
/// to complex values. Entries with modulus below 1e-15 are dropped.
class SparseVector {
 public:
  using EntryMap = std::map<std::uint64_t, std::complex<double>>;

  SparseVector() = default;

  static SparseVector basis(std::uint64_t n);

  void add(std::uint64_t index, std::complex<double> value);
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;

 private:
  EntryMap entries_;
};

/// Decimating shift on basis vectors: A_i e_n = e_((n+i-1)/2) when
/// n+i-1 is even, 0 otherwise.
SparseVector apply_A(int letter, const SparseVector& x);

/// Interleaving isometry on basis vectors: B_i e_n = e_(2n-i+1).
SparseVector apply_B(int letter, const SparseVector& x);

/// Closed-form index map of the composed decimations: the composition
/// indexed by the word i sends e_n to e_rho(i, n) when the value is a
/// positive integer, and to 0 otherwise.
mpq_class rho(const Word& i, std::uint64_t n);

/// Integer part of rho when the divisibility holds.
std::optional<std::uint64_t> rho_index(const Word& i, std::uint64_t n);

/// Closed-form index map of the composed interleavings: e_n maps to
/// e_sigma(i, n).
std::uint64_t sigma(const Word& i, std::uint64_t n);

/// The composed decimation indexed by the reversed word acting on a
/// vector (the adjoint-side factor of a monomial action).
SparseVector apply_A_star_word(const Word& j, const SparseVector& x);

/// The composed interleaving indexed by a word.
SparseVector apply_B_word(const Word& i, const SparseVector& x);

/// Spatial action of an algebra element: each monomial s_i s_j* acts as
/// the interleaving of i composed with the decimation of j. Coefficients
/// convert to floating point at this boundary; index arithmetic is exact.
SparseVector apply_element(const AlgElement& f, const SparseVector& x,
                           const RepConfig& cfg);

double lp_norm(const SparseVector& x, const RepConfig& cfg);

/// Verifies the five defining operator relations on basis vectors
/// e_1..e_N by exact index arithmetic.
Report check_relations(std::uint64_t N, const RepConfig& cfg);

/// Verifies that the p-th powers of the decimation images over all words
/// of length alpha partition the p-th power of the norm.
Report partition_norm_check(const SparseVector& x, int alpha, const RepConfig& cfg);

/// Verifies the isometry identity for sum_k B_(kj) A_(k*) and the
/// contraction bound for sum_k B_k A_((kj)*) on the given vector.
Report isometry_check(int alpha, const Word& j, const SparseVector& x,
                      const RepConfig& cfg);

struct CollapseRow {
  int N = 0;
  double quotient_lower = 0.0;
  double rep_ratio = 0.0;
  double bound = 0.0;
};

/// The norm-collapse table: the quotient norm of the N-th power of the
/// averaged backward shifts stays 1 while its spatial image contracts
/// the block vector e_1+...+e_(2^N) by the factor 2^(-N/p).
std::vector<CollapseRow> norm_collapse_experiment(int n_max, const RepConfig& cfg);

}  // namespace cu2

#endif
