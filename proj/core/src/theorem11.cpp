#include <cmath>
#include <string>

#include "qcf/objects.hpp"

namespace qcf {

CF64 numeric_P(CF64 a, CF64 x, CF64 q) {
  if (q.abs() >= 1.0) throw Error(ErrorKind::InvalidArgument, "|q| must be below 1");
  CF64 sum(1.0), term(1.0), qj(1.0);  // qj = q^j
  const CF64 x2 = x * x;
  for (int j = 1; j < 5000; ++j) {
    qj *= q;
    // term_j / term_{j-1} = q^j a x / ((1 - q^j)(1 - x^2 q^j))
    const CF64 den = (CF64(1.0) - qj) * (CF64(1.0) - x2 * qj);
    if (den.abs() == 0.0) throw Error(ErrorKind::ZeroDenominatorFactor, "P has a vanishing denominator factor");
    term = term * qj * a * x / den;
    sum += term;
    if (!sum.is_finite()) throw Error(ErrorKind::NumericOverflow, "P diverged");
    if (term.abs() <= 1e-18 * std::max(1.0, sum.abs())) return sum;
  }
  throw Error(ErrorKind::NumericOverflow, "P did not converge");
}

Theorem11Result theorem11_eval(int m, int i, CF64 q, int k, double tol) {
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "m must be at least 3");
  if (i < 1 || i > m) throw Error(ErrorKind::InvalidArgument, "need 1 <= i <= m");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (q.abs() >= 1.0) throw Error(ErrorKind::InvalidArgument, "|q| must be below 1");
  const CF64 w = primitive_root(m);
  const CF64 wb = w.inverse();
  const CF64 ws = w + wb;
  Theorem11Result r;
  r.depth = m * k + i - 1;
  CF64 v(0.0);
  for (int n = r.depth; n >= 1; --n) {
    const CF64 num = n == 1 ? CF64(1.0) : CF64(-1.0);
    const CF64 den = ws + q.pow(n) + v;
    if (den.abs() == 0.0) throw Error(ErrorKind::NumericOverflow, "zero tail in the finite fraction");
    v = num / den;
    if (!v.is_finite()) throw Error(ErrorKind::NumericOverflow, "finite fraction overflow");
  }
  r.lhs = v;
  const CF64 top = w.pow(1 - i) * numeric_P(q, w, q) - w.pow(i - 1) * numeric_P(q, wb, q);
  const CF64 bot = w.pow(-i) * numeric_P(CF64(1.0), w, q) - w.pow(i) * numeric_P(CF64(1.0), wb, q);
  if (bot.abs() == 0.0) throw Error(ErrorKind::NumericOverflow, "P-quotient denominator vanishes");
  r.rhs = top / bot;
  if (!r.rhs.is_finite()) throw Error(ErrorKind::NumericOverflow, "P-quotient overflow");
  r.diff = (r.lhs - r.rhs).abs();
  r.pass = r.diff < tol;
  return r;
}

bool theorem11_check(int m, int i, CF64 q, int k, double tol) { return theorem11_eval(m, i, q, k, tol).pass; }

}  // namespace qcf
