#pragma once

#include <complex>
#include <ostream>
#include <string>

namespace qcf {

/// Double-precision complex scalar. Numeric checks only; never part of an
/// exact verification path.
class CF64 {
 public:
  CF64() = default;
  CF64(double re, double im = 0.0) : z_(re, im) {}  // NOLINT(google-explicit-constructor)
  explicit CF64(std::complex<double> z) : z_(z) {}

  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double abs() const { return std::abs(z_); }
  std::complex<double> value() const { return z_; }

  bool is_zero() const { return z_ == std::complex<double>(0.0, 0.0); }
  bool is_finite() const;

  CF64 operator-() const { return CF64(-z_); }
  CF64& operator+=(const CF64& o) { z_ += o.z_; return *this; }
  CF64& operator-=(const CF64& o) { z_ -= o.z_; return *this; }
  CF64& operator*=(const CF64& o) { z_ *= o.z_; return *this; }
  CF64& operator/=(const CF64& o);

  friend CF64 operator+(CF64 a, const CF64& b) { return a += b; }
  friend CF64 operator-(CF64 a, const CF64& b) { return a -= b; }
  friend CF64 operator*(CF64 a, const CF64& b) { return a *= b; }
  friend CF64 operator/(CF64 a, const CF64& b) { return a /= b; }
  friend bool operator==(const CF64& a, const CF64& b) { return a.z_ == b.z_; }

  CF64 inverse() const { return CF64(1.0) / *this; }
  CF64 pow(long n) const;

  std::string str() const;

 private:
  std::complex<double> z_{0.0, 0.0};
};

inline std::ostream& operator<<(std::ostream& os, const CF64& x) { return os << x.str(); }

/// exp(2*pi*i/m).
CF64 primitive_root(int m);

}  // namespace qcf
