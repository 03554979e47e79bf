#include "scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace cu2 {

mpq_class Scalar::rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("invalid rational: '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Scalar Scalar::from_strings(const std::string& re_str, const std::string& im_str) {
  return {rational_from_string(re_str), rational_from_string(im_str)};
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Scalar::inverse of zero");
  }
  mpq_class n = re * re + im * im;
  return {re / n, -im / n};
}

double Scalar::abs() const {
  if (is_real()) {
    return std::fabs(re.get_d());
  }
  return std::hypot(re.get_d(), im.get_d());
}

mpq_class Scalar::abs_real() const {
  if (!is_real()) {
    throw std::domain_error("abs_real on a non-real scalar");
  }
  return ::abs(re);
}

std::string Scalar::rational_to_string(const mpq_class& q) {
  mpq_class canonical = q;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

}  // namespace cu2
