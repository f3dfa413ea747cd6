#include "qcf/cf64.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcf/error.hpp"
#include "qcf/scalar.hpp"

namespace qcf {

bool CF64::is_finite() const { return std::isfinite(z_.real()) && std::isfinite(z_.imag()); }

CF64& CF64::operator/=(const CF64& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
  z_ /= o.z_;
  return *this;
}

CF64 CF64::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  CF64 r(1.0), b(*this);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

std::string CF64::str() const {
  std::ostringstream os;
  os.precision(17);
  os << z_.real() << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i";
  return os.str();
}

CF64 primitive_root(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
  if (m == 1) return CF64(1.0);
  if (m == 2) return CF64(-1.0);
  if (m == 4) return CF64(0.0, 1.0);
  const double th = 2.0 * std::numbers::pi / m;
  return CF64(std::cos(th), std::sin(th));
}

CF64 to_cf64(const EisRat& x) { return CF64(x.u().to_double()) + CF64(x.v().to_double()) * primitive_root(3); }

}  // namespace qcf
