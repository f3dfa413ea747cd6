#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qcf/cfrac.hpp"

namespace qcf {

bool worpitzky_check(const ContinuedFraction<CF64>& cf, int depth) {
  CF64 prev_b(1.0);
  for (int n = 1; n <= depth; ++n) {
    const auto [a, b] = cf.term(n);
    if (b.is_zero()) throw Error(ErrorKind::NormalizationImpossible, "b_" + std::to_string(n) + " = 0");
    const CF64 c = n == 1 ? a / b : a / (prev_b * b);
    if (!c.is_finite()) throw Error(ErrorKind::NumericOverflow, "normalized numerator overflow");
    if (c.abs() > 0.25) return false;
    prev_b = b;
  }
  return true;
}

CF64 cf_eval_backward(const ContinuedFraction<CF64>& cf, int depth) {
  CF64 v(0.0);
  for (int n = depth; n >= 1; --n) {
    const auto [a, b] = cf.term(n);
    v = a / (b + v);
    if (!v.is_finite()) throw Error(ErrorKind::NumericOverflow, "backward evaluation overflow");
  }
  return cf.b0 + v;
}

bool pincherle_limit_check(const ContinuedFraction<CF64>& cf, const std::function<CF64(int)>& G, int depth,
                           double tol) {
  if (depth < 4) throw Error(ErrorKind::InvalidArgument, "depth too small");
  // A, B of K a_n/b_n (no b0), rescaled jointly with G to avoid overflow
  CF64 Am(1.0), A(0.0), Bm(0.0), B(1.0);
  CF64 Gm = G(-1), Gc = G(0);
  const CF64 limit = -(Gc / Gm);
  std::vector<double> ratio;
  ratio.reserve(depth);
  double g_scale = 1.0;
  for (int n = 1; n <= depth; ++n) {
    const auto [a, b] = cf.term(n);
    if (a.is_zero()) throw Error(ErrorKind::ZeroPartialNumerator, "a_" + std::to_string(n) + " = 0");
    const CF64 An = b * A + a * Am, Bn = b * B + a * Bm;
    const CF64 expect = b * Gc + a * Gm;
    const CF64 gn = G(n) / CF64(g_scale);
    const double mag = std::max({gn.abs(), (b * Gc).abs(), (a * Gm).abs(), 1e-300});
    if ((gn - expect).abs() > 1e-9 * mag)
      throw Error(ErrorKind::RecurrenceViolation, "G violates the recurrence at n = " + std::to_string(n));
    Am = A; A = An; Bm = B; B = Bn;
    Gm = Gc; Gc = gn;
    if (B.is_zero()) throw Error(ErrorKind::DivisionByZero, "B_" + std::to_string(n) + " = 0");
    ratio.push_back((Gc / B).abs());
    const double s = B.abs();
    if (s > 1e100 || s < 1e-100) {
      const CF64 f(1.0 / s);
      A *= f; Am *= f; B *= f; Bm *= f; Gc *= f; Gm *= f;
      g_scale *= s;
    }
    if (!A.is_finite() || !B.is_finite() || !Gc.is_finite())
      throw Error(ErrorKind::NumericOverflow, "convergent overflow");
  }
  // |G_n/B_n| must decrease over the second half of the window until it reaches noise
  const double noise = 1e-14;
  for (int n = depth / 2; n < depth; ++n)
    if (ratio[n] > ratio[n - 1] * (1 + 1e-12) && ratio[n] > noise) return false;
  if (ratio.back() >= 1e-10) return false;
  return (A / B - limit).abs() < tol;
}

}  // namespace qcf
