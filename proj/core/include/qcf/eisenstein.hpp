#pragma once

#include <ostream>
#include <string>

#include "qcf/rational.hpp"

namespace qcf {

/// u + v*w with w a primitive cube root of unity (w^2 = -1 - w).
class EisRat {
 public:
  EisRat() = default;
  EisRat(long u) : u_(u) {}  // NOLINT(google-explicit-constructor)
  EisRat(Rat u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  EisRat(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {}

  static EisRat omega() { return {Rat(0), Rat(1)}; }

  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_rational() const { return v_.is_zero(); }

  EisRat conj() const { return {u_ - v_, -v_}; }
  Rat norm() const { return u_ * u_ - u_ * v_ + v_ * v_; }
  EisRat inverse() const;

  EisRat operator-() const { return {-u_, -v_}; }
  EisRat& operator+=(const EisRat& o) { u_ += o.u_; v_ += o.v_; return *this; }
  EisRat& operator-=(const EisRat& o) { u_ -= o.u_; v_ -= o.v_; return *this; }
  EisRat& operator*=(const EisRat& o);
  EisRat& operator/=(const EisRat& o) { return *this *= o.inverse(); }

  friend EisRat operator+(EisRat a, const EisRat& b) { return a += b; }
  friend EisRat operator-(EisRat a, const EisRat& b) { return a -= b; }
  friend EisRat operator*(EisRat a, const EisRat& b) { return a *= b; }
  friend EisRat operator/(EisRat a, const EisRat& b) { return a /= b; }

  friend bool operator==(const EisRat& a, const EisRat& b) = default;

  std::string str() const;

 private:
  Rat u_;
  Rat v_;
};

inline std::ostream& operator<<(std::ostream& os, const EisRat& x) { return os << x.str(); }

}  // namespace qcf
