#ifndef CU2_SCALAR_HPP
#define CU2_SCALAR_HPP

#include <gmpxx.h>

#include <string>

namespace cu2 {

/// A Gaussian rational re + im*i with exact arithmetic throughout.
struct Scalar {
  mpq_class re;
  mpq_class im;

  Scalar() : re(0), im(0) {}
  Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit Scalar(long r) : re(r), im(0) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  /// Parses canonical "p/q" (or "p") strings; the imaginary part may be
  /// omitted by passing "0".
  static Scalar from_strings(const std::string& re_str, const std::string& im_str);
  static mpq_class rational_from_string(const std::string& s);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar operator+(const Scalar& o) const { return {re + o.re, im + o.im}; }
  Scalar operator-(const Scalar& o) const { return {re - o.re, im - o.im}; }
  Scalar operator-() const { return {-re, -im}; }
  Scalar operator*(const Scalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  Scalar conj() const { return {re, -im}; }

  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Complex modulus in floating point.
  double abs() const;

  /// |re| for real scalars; throws if im != 0.
  mpq_class abs_real() const;

  /// Canonical "p/q" with q > 0, gcd(p, q) = 1.
  static std::string rational_to_string(const mpq_class& q);
  std::string re_string() const { return rational_to_string(re); }
  std::string im_string() const { return rational_to_string(im); }
};

}  // namespace cu2

#endif
