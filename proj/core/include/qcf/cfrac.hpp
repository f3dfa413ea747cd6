#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qcf/series.hpp"

namespace qcf {

/// b0 + K_{n>=1} a_n / b_n. T is Series<R> or CF64.
template <class T>
struct ContinuedFraction {
  T b0;
  std::function<std::pair<T, T>(int)> term;  // n -> (a_n, b_n), n >= 1
};

template <class T>
struct ConvergentPair {
  T A;
  T B;
  int index = 0;
  int stable_order = -1;  // -1 when not applicable (numeric mode, index 0)
};

namespace detail {

template <class R>
Series<R> one_like(const Series<R>& s) { return Series<R>::one(s.order(), s.scale()); }
template <class R>
Series<R> zero_like(const Series<R>& s) { return Series<R>(s.order(), s.scale()); }
inline CF64 one_like(const CF64&) { return CF64(1.0); }
inline CF64 zero_like(const CF64&) { return CF64(0.0); }

}  // namespace detail

/// Largest j such that A/B and A'/B' agree through t^j, via the cross product.
template <class R>
int stable_order_between(const ConvergentPair<Series<R>>& prev, const ConvergentPair<Series<R>>& cur) {
  if (prev.B[0].is_zero() || cur.B[0].is_zero())
    throw Error(ErrorKind::NonInvertibleConstantTerm,
                "denominator convergent with zero constant term at index " +
                    std::to_string(prev.B[0].is_zero() ? prev.index : cur.index));
  const Series<R> det = cur.A * prev.B - prev.A * cur.B;
  return std::min(det.order(), det.valuation() - 1);
}

/// Largest j with A_N = A_{N-1} and B_N = B_{N-1} through t^j.
template <class R>
int separate_stable_order(const ConvergentPair<Series<R>>& prev, const ConvergentPair<Series<R>>& cur) {
  const Series<R> da = cur.A - prev.A;
  const Series<R> db = cur.B - prev.B;
  return std::min({da.order(), da.valuation() - 1, db.valuation() - 1});
}

/// Pairs for indices 0..N, with A_{-1} = 1, B_{-1} = 0, A_0 = b0, B_0 = 1.
/// A series a_n that vanishes modulo the truncation is past the precision,
/// not an error; a zero numeric a_n is.
template <class T>
std::vector<ConvergentPair<T>> convergents(const ContinuedFraction<T>& cf, int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be nonnegative");
  std::vector<ConvergentPair<T>> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  T Am = detail::one_like(cf.b0), Bm = detail::zero_like(cf.b0);
  out.push_back({cf.b0, detail::one_like(cf.b0), 0, -1});
  for (int n = 1; n <= N; ++n) {
    auto [a, b] = cf.term(n);
    if constexpr (std::is_same_v<T, CF64>)
      if (a.is_zero()) throw Error(ErrorKind::ZeroPartialNumerator, "a_" + std::to_string(n) + " = 0");
    const auto& last = out.back();
    T A = b * last.A + a * Am;
    T B = b * last.B + a * Bm;
    Am = last.A;
    Bm = last.B;
    ConvergentPair<T> p{std::move(A), std::move(B), n, -1};
    if constexpr (!std::is_same_v<T, CF64>) {
      try {
        p.stable_order = stable_order_between(out.back(), p);
      } catch (const Error&) {
        p.stable_order = -1;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Agreement order of the last two pairs.
template <class R>
int stabilization_order(const std::vector<ConvergentPair<Series<R>>>& pairs) {
  if (pairs.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two convergents");
  return stable_order_between(pairs[pairs.size() - 2], pairs.back());
}

/// Advisory: sum_{k<=N} val(a_k) - 1, the agreement order guaranteed by the
/// determinant formula when the denominators are units.
template <class R>
int stabilization_lower_bound(const ContinuedFraction<Series<R>>& cf, int N) {
  long total = 0;
  int cap = cf.b0.order();
  for (int n = 1; n <= N; ++n) {
    total += cf.term(n).first.valuation();
    if (total - 1 >= cap) return cap;
  }
  return static_cast<int>(total) - 1;
}

/// a_n -> r_n r_{n-1} a_n, b_n -> r_n b_n with r_0 = 1.
template <class T>
ContinuedFraction<T> equivalence_transform(const ContinuedFraction<T>& cf, std::function<T(int)> r) {
  ContinuedFraction<T> out;
  out.b0 = cf.b0;
  out.term = [cf, r](int n) {
    const T rn = r(n);
    if (rn.is_zero()) throw Error(ErrorKind::ZeroMultiplier, "r_" + std::to_string(n) + " = 0");
    const T rp = n == 1 ? detail::one_like(rn) : r(n - 1);
    if (rp.is_zero()) throw Error(ErrorKind::ZeroMultiplier, "r_" + std::to_string(n - 1) + " = 0");
    auto [a, b] = cf.term(n);
    return std::pair<T, T>{rn * rp * a, rn * b};
  };
  return out;
}

/// Odd part: the k-th convergent is (A_{2k+1}, B_{2k+1}) of the input for
/// k >= 1 and its 0-th value is A_1/B_1.
template <class T>
ContinuedFraction<T> odd_part(const ContinuedFraction<T>& cf) {
  auto odd_b = [cf](int m) {
    T b = cf.term(m).second;
    if (b.is_zero()) throw Error(ErrorKind::ZeroOddPartialDenominator, "b_" + std::to_string(m) + " = 0");
    return b;
  };
  ContinuedFraction<T> out;
  const auto [a1, b1] = cf.term(1);
  out.b0 = (cf.b0 * odd_b(1) + a1) / b1;
  out.term = [cf, odd_b](int k) {
    const T b1 = odd_b(1);
    const T bl = odd_b(2 * k - 1);
    const T br = odd_b(2 * k + 1);
    const T al = cf.term(2 * k - 1).first;
    const auto [ae, be] = cf.term(2 * k);
    const T ar = cf.term(2 * k + 1).first;
    if (k == 1) return std::pair<T, T>{-(al * ae * br) / b1, b1 * (ar + be * br) + ae * br};
    T c = -(al * ae * br) / bl;
    if (k == 2) c = c * b1;
    return std::pair<T, T>{c, ar + be * br + ae * br / bl};
  };
  return out;
}

template <class R>
struct CFLimit {
  Series<R> value;
  int N = 0;
  int stable_order = 0;
};

/// A_N/B_N at the first N where consecutive ratios agree through `order`
/// for two successive indices.
template <class R>
CFLimit<R> cf_value(const ContinuedFraction<Series<R>>& cf, int order, int max_N = 0) {
  if (max_N <= 0) max_N = 4 * order + 50;
  ConvergentPair<Series<R>> m1{detail::one_like(cf.b0), detail::zero_like(cf.b0), -1, -1};
  ConvergentPair<Series<R>> cur{cf.b0, detail::one_like(cf.b0), 0, -1};
  long val_sum = 0;
  int hits = 0;
  for (int n = 1; n <= max_N; ++n) {
    auto [a, b] = cf.term(n);
    val_sum += a.valuation();
    ConvergentPair<Series<R>> next{b * cur.A + a * m1.A, b * cur.B + a * m1.B, n, -1};
    m1 = std::move(cur);
    cur = std::move(next);
    if (val_sum - 1 < order) continue;  // the determinant cannot vanish yet
    cur.stable_order = stable_order_between(m1, cur);
    hits = cur.stable_order >= order ? hits + 1 : 0;
    if (hits >= 2) return {(cur.A / cur.B).truncated(order), n, cur.stable_order};
  }
  throw Error(ErrorKind::DegenerateSpecialization, "convergent ratios did not stabilize by N = " + std::to_string(max_N));
}

template <class R>
struct CFSeparateLimits {
  Series<R> A;
  Series<R> B;
  int N = 0;
};

/// Numerators and denominators individually, once each agrees with its
/// predecessor through `order` at two successive indices.
template <class R>
CFSeparateLimits<R> cf_separate_limits(const ContinuedFraction<Series<R>>& cf, int order, int max_N = 0) {
  if (max_N <= 0) max_N = 4 * order + 50;
  ConvergentPair<Series<R>> m1{detail::one_like(cf.b0), detail::zero_like(cf.b0), -1, -1};
  ConvergentPair<Series<R>> cur{cf.b0, detail::one_like(cf.b0), 0, -1};
  int hits = 0;
  for (int n = 1; n <= max_N; ++n) {
    auto [a, b] = cf.term(n);
    ConvergentPair<Series<R>> next{b * cur.A + a * m1.A, b * cur.B + a * m1.B, n, -1};
    m1 = std::move(cur);
    cur = std::move(next);
    hits = separate_stable_order(m1, cur) >= order ? hits + 1 : 0;
    if (hits >= 2) return {cur.A.truncated(order), cur.B.truncated(order), n};
  }
  throw Error(ErrorKind::DegenerateSpecialization, "convergents did not converge separately by N = " + std::to_string(max_N));
}

// Numeric mode.

/// |c_n| <= 1/4 for n <= depth after normalizing to b_n = 1
/// (c_1 = a_1/b_1, c_n = a_n/(b_{n-1} b_n)).
bool worpitzky_check(const ContinuedFraction<CF64>& cf, int depth);

/// Pincherle: G satisfies the three-term recurrence, G_n/B_n decays to 0 and
/// the depth-th approximant lies within tol of -G_0/G_{-1}.
bool pincherle_limit_check(const ContinuedFraction<CF64>& cf, const std::function<CF64(int)>& G, int depth,
                           double tol);

/// Backward evaluation of b0 + K_{n<=depth} a_n/b_n.
CF64 cf_eval_backward(const ContinuedFraction<CF64>& cf, int depth);

}  // namespace qcf
