#include "qcf/eisenstein.hpp"

#include "qcf/error.hpp"

namespace qcf {

EisRat& EisRat::operator*=(const EisRat& o) {
  // w^2 = -1 - w
  const Rat vv = v_ * o.v_;
  const Rat u = u_ * o.u_ - vv;
  const Rat v = u_ * o.v_ + v_ * o.u_ - vv;
  u_ = u;
  v_ = v;
  return *this;
}

EisRat EisRat::inverse() const {
  const Rat n = norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const EisRat c = conj();
  return {c.u_ / n, c.v_ / n};
}

std::string EisRat::str() const {
  if (v_.is_zero()) return u_.str();
  const std::string w = v_.is_one() ? "w" : (v_ == Rat(-1) ? "-w" : v_.str() + "*w");
  if (u_.is_zero()) return w;
  return u_.str() + (w[0] == '-' ? "" : "+") + w;
}

}  // namespace qcf
