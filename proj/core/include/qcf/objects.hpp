#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcf/cfrac.hpp"
#include "qcf/qseries.hpp"

// Orders are t-orders, q = t^scale.

namespace qcf {

template <class R>
struct HParams {
  Monomial<R> a;
  Monomial<R> b;
  Monomial<R> c;
  Monomial<R> d;
  int scale = 1;
};

template <class R>
struct WatsonParams {
  Monomial<R> A, B, C, D, E;
  int n = 0;
};

namespace detail {

template <class R>
Monomial<R> qpow(int k, int scale) { return Monomial<R>(R(1), k * scale); }

template <class R>
Series<R> mono(const Monomial<R>& m, int order, int scale) { return Series<R>::monomial(m, order, scale); }

template <class R>
Series<R> sum_of(const std::vector<Monomial<R>>& ms, int order, int scale) {
  Series<R> s(order, scale);
  for (const auto& m : ms) s += mono(m, order, scale);
  return s;
}

template <class R>
class GaussTable {
 public:
  GaussTable(int order, int scale) : order_(order), scale_(scale) {}
  const Series<R>& operator()(int n, int k) {
    if (n < 0 || k < 0 || k > n) return zero();
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<Series<R>> row;
      for (int j = 0; j <= m; ++j) row.push_back(gaussian_binomial<R>(m, j, order_, scale_));
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  const Series<R>& zero() {
    if (!zero_) zero_ = Series<R>(order_, scale_);
    return *zero_;
  }
  int order_, scale_;
  std::vector<std::vector<Series<R>>> rows_;
  std::optional<Series<R>> zero_;
};

}  // namespace detail

/// 1/1 + (-ab+cq)/(a+b+dq) + ... + (-ab+cq^n)/(a+b+dq^n) + ...
template <class R>
ContinuedFraction<Series<R>> cf_H(const HParams<R>& p, int order) {
  const int s = p.scale;
  ContinuedFraction<Series<R>> cf;
  cf.b0 = Series<R>(order, s);
  cf.term = [p, order, s](int n) {
    if (n == 1) return std::pair{Series<R>::one(order, s), Series<R>::one(order, s)};
    const int k = n - 1;
    using detail::qpow;
    return std::pair{detail::sum_of<R>({-(p.a * p.b), p.c * qpow<R>(k, s)}, order, s),
                     detail::sum_of<R>({p.a, p.b, p.d * qpow<R>(k, s)}, order, s)};
  };
  return cf;
}

/// 1/1 + (-abq+c)/((a+b)q+d) + ... + (-abq^(2n+1)+cq^n)/((a+b)q^(n+1)+d) + ...
template <class R>
ContinuedFraction<Series<R>> cf_H1(const HParams<R>& p, int order) {
  const int s = p.scale;
  ContinuedFraction<Series<R>> cf;
  cf.b0 = Series<R>(order, s);
  cf.term = [p, order, s](int n) {
    if (n == 1) return std::pair{Series<R>::one(order, s), Series<R>::one(order, s)};
    const int k = n - 2;
    using detail::qpow;
    return std::pair{
        detail::sum_of<R>({-(p.a * p.b * qpow<R>(2 * k + 1, s)), p.c * qpow<R>(k, s)}, order, s),
        detail::sum_of<R>({p.a * qpow<R>(k + 1, s), p.b * qpow<R>(k + 1, s), p.d}, order, s)};
  };
  return cf;
}

template <class R>
Series<R> explicit_A_N(const HParams<R>& p, int N, int order) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "A_N needs N >= 1");
  const int s = p.scale;
  detail::GaussTable<R> g(order, s);
  Series<R> out(order, s);
  for (int n = 0; n < N; ++n)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l <= n; ++l) {
        const int bb = N - 1 - n - j - l;
        if (bb < 0) continue;
        const Monomial<R> m = p.a.pow(j) * p.b.pow(bb) * p.c.pow(l) * p.d.pow(n - l) *
                              detail::qpow<R>(n * (n + 1) / 2 + l * (l + 1) / 2, s);
        if (m.is_zero() || m.exp > order) continue;
        out += g(n + j, j) * g(N - 1 - j - l, n) * g(n, l) * m;
      }
  return out;
}

template <class R>
Series<R> explicit_B_N(const HParams<R>& p, int N, int order) {
  const int s = p.scale;
  Series<R> out = explicit_A_N(p, N, order);
  detail::GaussTable<R> g(order, s);
  Series<R> tail(order, s);
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l <= n; ++l) {
        const int bb = N - 2 - n - j - l;
        if (bb < 0) continue;
        const Monomial<R> m = p.a.pow(j) * p.b.pow(bb) * p.c.pow(l) * p.d.pow(n - l) *
                              detail::qpow<R>(n * (n + 3) / 2 + l * (l + 1) / 2, s);
        if (m.is_zero() || m.exp > order) continue;
        tail += g(n + j, j) * g(N - 2 - j - l, n) * g(n, l) * m;
      }
  const Series<R> cq_ab = detail::sum_of<R>({p.c * detail::qpow<R>(1, s), -(p.a * p.b)}, order, s);
  return out + cq_ab * tail;
}

template <class R>
Series<R> explicit_C_N(const HParams<R>& p, int N, int order) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "C_N needs N >= 1");
  const int s = p.scale;
  detail::GaussTable<R> g(order, s);
  Series<R> out(order, s);
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int l = 0; l <= std::min(n - j, N - 1 - n); ++l) {
        const Monomial<R> m = p.a.pow(j) * p.b.pow(n - j - l) * p.c.pow(l) * p.d.pow(N - 1 - n - l) *
                              detail::qpow<R>(n * (n + 1) / 2 + l * (l - 1) / 2, s);
        if (m.is_zero() || m.exp > order) continue;
        out += g(N - 1 - n + j, j) * g(N - 1 - j - l, n - j - l) * g(N - 1 - n, l) * m;
      }
  return out;
}

template <class R>
Series<R> explicit_D_N(const HParams<R>& p, int N, int order) {
  const int s = p.scale;
  Series<R> out = explicit_C_N(p, N, order);
  detail::GaussTable<R> g(order, s);
  Series<R> tail(order, s);
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int l = 0; l <= std::min(n - j, N - 2 - n); ++l) {
        const Monomial<R> m = p.a.pow(j) * p.b.pow(n - j - l) * p.c.pow(l) * p.d.pow(N - 2 - n - l) *
                              detail::qpow<R>((n + 1) * (n + 2) / 2 - 1 + l * (l - 1) / 2, s);
        if (m.is_zero() || m.exp > order) continue;
        tail += g(N - 2 - n + j, j) * g(N - 2 - j - l, n - j - l) * g(N - 2 - n, l) * m;
      }
  const Series<R> c_abq = detail::sum_of<R>({p.c, -(p.a * p.b * detail::qpow<R>(1, s))}, order, s);
  return out + c_abq * tail;
}

namespace detail {

// Series in u with q-series coefficients, truncated at u^nmax.
template <class R>
using USeries = std::vector<Series<R>>;

template <class R>
USeries<R> umul(const USeries<R>& x, const USeries<R>& y, int nmax, int order, int scale) {
  USeries<R> r(nmax + 1, Series<R>(order, scale));
  for (int i = 0; i <= nmax; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= nmax; ++j)
      if (!y[j].is_zero()) r[i + j] += x[i] * y[j];
  }
  return r;
}

/// 1/((1 - a u q^k)(1 - b u q^k)) = sum_m h_m(a,b) q^(km) u^m.
template <class R>
USeries<R> geom2(const HParams<R>& p, int k, int nmax, int order) {
  const int s = p.scale;
  USeries<R> r(nmax + 1, Series<R>(order, s));
  for (int m = 0; m <= nmax; ++m)
    for (int i = 0; i <= m; ++i) {
      const Monomial<R> t = p.a.pow(i) * p.b.pow(m - i) * qpow<R>(k * m, s);
      if (!t.is_zero() && t.exp <= order) r[m] += mono(t, order, s);
    }
  return r;
}

template <class R>
std::vector<Series<R>> iterate_functional_equation(const HParams<R>& p, int nmax, int order, bool denominators) {
  const int s = p.scale;
  USeries<R> total(nmax + 1, Series<R>(order, s));
  USeries<R> prefix(nmax + 1, Series<R>(order, s));
  prefix[0] = Series<R>::one(order, s);
  for (int k = 0; k < nmax; ++k) {
    const USeries<R> e = geom2(p, k, nmax, order);
    // inhomogeneous part at u q^k
    USeries<R> g(nmax + 1, Series<R>(order, s));
    if (nmax >= 1) g[1] = mono(qpow<R>(k, s), order, s);
    if (denominators && nmax >= 2)
      g[2] = sum_of<R>({p.c * qpow<R>(1 + 2 * k, s), -(p.a * p.b * qpow<R>(2 * k, s))}, order, s);
    const USeries<R> term = umul(prefix, umul(g, e, nmax, order, s), nmax, order, s);
    for (int m = 0; m <= nmax; ++m) total[m] += term[m];
    // h(u q^k) = u q^k (d + c u q^(k+1)) e
    USeries<R> h(nmax + 1, Series<R>(order, s));
    if (nmax >= 1) h[1] = mono(p.d * qpow<R>(k, s), order, s);
    if (nmax >= 2) h[2] = mono(p.c * qpow<R>(2 * k + 1, s), order, s);
    prefix = umul(prefix, umul(h, e, nmax, order, s), nmax, order, s);
  }
  return total;
}

}  // namespace detail

/// Coefficients of u^N, N = 0..nmax, of F(u) from iterating
/// F(u) = [u + u(d + cuq) F(uq)] / ((1-au)(1-bu)).
template <class R>
std::vector<Series<R>> genfunc_F(const HParams<R>& p, int nmax, int order) {
  return detail::iterate_functional_equation(p, nmax, order, false);
}

/// Same for G(u) = [u + (cq-ab)u^2 + u(d + cuq) G(uq)] / ((1-au)(1-bu)).
template <class R>
std::vector<Series<R>> genfunc_G(const HParams<R>& p, int nmax, int order) {
  return detail::iterate_functional_equation(p, nmax, order, true);
}

namespace detail {

// sum_n x^n q^((n^2 + lin2 n)/2) (num)_n / ((den1)_{n+off} (q)_n)
template <class R>
Series<R> basic_sum(const Monomial<R>& x, int lin2, std::vector<PochFactor<R>> num,
                    std::vector<PochFactor<R>> den, int order, int scale) {
  TermSpec<R> t;
  t.x = x;
  t.quad2 = 1;
  t.lin2 = lin2;
  t.num = std::move(num);
  t.den = std::move(den);
  t.den.push_back({qpow<R>(1, scale)});
  return hyper_sum(t, order, scale);
}

}  // namespace detail

/// (1/H - 1, quotient of the two sums).
template <class R>
SeriesPair<R> limit_H_sides(const HParams<R>& p, int order) {
  const int s = p.scale;
  const Series<R> H = cf_value(cf_H(p, order), order).value;
  const Series<R> lhs = H.inverse() - Series<R>::one(order, s);
  const Monomial<R> x = p.d / p.b;
  const Monomial<R> z = -(p.c * detail::qpow<R>(1, s) / (p.d * p.b));
  const PochFactor<R> ab{p.a / p.b, 1, 1, 1};
  const Series<R> n1 = detail::basic_sum<R>(x, 3, {{z}}, {ab}, order, s);
  const Series<R> n0 = detail::basic_sum<R>(x, 1, {{z}}, {ab}, order, s);
  const Series<R> pre = detail::sum_of<R>({p.c * detail::qpow<R>(1, s) / p.b, -p.a}, order, s);
  return {lhs, pre * n1 / n0};
}

/// The limits of A_N and B_N when b = 1.
template <class R>
SeriesPair<R> limit_AN_BN(const HParams<R>& p, int order) {
  if (!(p.b == Monomial<R>(R(1), 0))) throw Error(ErrorKind::InvalidArgument, "separate limits need b = 1");
  const int s = p.scale;
  const Monomial<R> z = -(p.c * detail::qpow<R>(1, s) / p.d);
  const PochFactor<R> a{p.a, 1, 1, 1};
  const Series<R> A = detail::basic_sum<R>(p.d, 1, {{z}}, {a}, order, s);
  const Series<R> t = detail::basic_sum<R>(p.d, 3, {{z}}, {a}, order, s);
  const Series<R> pre = detail::sum_of<R>({p.c * detail::qpow<R>(1, s), -p.a}, order, s);
  return {A, A + pre * t};
}

template <class R>
SeriesPair<R> limit_H1_sides(const HParams<R>& p, int order) {
  const int s = p.scale;
  const Series<R> H = cf_value(cf_H1(p, order), order).value;
  const Series<R> lhs = H.inverse() - Series<R>::one(order, s);
  const Monomial<R> x = p.b / p.d;
  const Monomial<R> z = -(p.c / (p.b * p.d));
  const Monomial<R> aq_d = p.a * detail::qpow<R>(1, s) / p.d;
  const Series<R> s1 = detail::basic_sum<R>(x, 3, {{z}}, {{-(aq_d * detail::qpow<R>(1, s))}}, order, s);
  const Series<R> s0 = detail::basic_sum<R>(x, 1, {{z}}, {{-aq_d}}, order, s);
  const Series<R> num = detail::sum_of<R>({p.c, -(p.a * p.b * detail::qpow<R>(1, s))}, order, s);
  const Series<R> den = detail::sum_of<R>({p.d, p.a * detail::qpow<R>(1, s)}, order, s);
  return {lhs, num * s1 / (den * s0)};
}

/// (C_inf, D_inf) from the closed forms; d = 1.
template <class R>
SeriesPair<R> limit_CN_DN(const HParams<R>& p, int order) {
  if (!(p.d == Monomial<R>(R(1), 0))) throw Error(ErrorKind::InvalidArgument, "separate limits need d = 1");
  const int s = p.scale;
  const Monomial<R> aq = -(p.a * detail::qpow<R>(1, s));
  const Series<R> prod = pochhammer_infinite(aq, order, s);
  const Monomial<R> z = -(p.c / p.b);
  const Series<R> c = prod * detail::basic_sum<R>(p.b, 1, {{z}}, {{aq}}, order, s);
  const Series<R> t = prod * detail::basic_sum<R>(p.b, 3, {{z}}, {{aq, 1, 1, 1}}, order, s);
  const Series<R> pre = detail::sum_of<R>({p.c, -(p.a * p.b * detail::qpow<R>(1, s))}, order, s);
  return {c, c + pre * t};
}

/// (lim C_N/d^(N-1), lim D_N/d^(N-1)) through the convergents of H1.
template <class R>
SeriesPair<R> h1_scaled_limits(const HParams<R>& p, int order) {
  const int s = p.scale;
  const Series<R> dinv = Series<R>::monomial(Monomial<R>(R(1)) / p.d, order, s);
  const Series<R> one = Series<R>::one(order, s);
  auto cf = equivalence_transform<Series<R>>(cf_H1(p, order), [dinv, one](int n) { return n == 1 ? one : dinv; });
  auto lim = cf_separate_limits(cf, order);
  return {lim.A, lim.B};
}

namespace detail {

/// sum_r (1 - A q^(2r))/(1 - A) (A)_r (C)_r (E)_r x^r q^(3r(r-1)/2 + 2r)
///       / ((Aq/C)_r (Aq/E)_r (q)_r), with Aq/C, Aq/E passed explicitly.
template <class R>
Series<R> watson_lhs_sum(const Monomial<R>& A, const Monomial<R>& C, const Monomial<R>& E, const Monomial<R>& x,
                         const Monomial<R>& AqC, const Monomial<R>& AqE, int order, int scale) {
  TermSpec<R> t;
  t.x = x;
  t.quad2 = 3;
  t.lin2 = 1;
  t.num = {{A * qpow<R>(2, scale), 2}, {A}, {C}, {E}};
  t.den = {{A, 2}, {AqC}, {AqE}, {qpow<R>(1, scale)}};
  return hyper_sum(t, order, scale);
}

}  // namespace detail

/// The B, D, n -> infinity form of the 8phi7 transformation.
template <class R>
SeriesPair<R> watson_limit_sides(const Monomial<R>& A, const Monomial<R>& C, const Monomial<R>& E, int order,
                                 int scale) {
  using detail::qpow;
  const Monomial<R> q = qpow<R>(1, scale);
  const Monomial<R> x = -(A * A / (C * E));
  const Series<R> lhs = detail::watson_lhs_sum(A, C, E, x, A * q / C, A * q / E, order, scale);
  TermSpec<R> t;
  t.x = -(A * q / E);
  t.quad2 = 1;
  t.lin2 = -1;
  t.num = {{E}};
  t.den = {{q}, {A * q / C}};
  const Series<R> rhs = pochhammer_infinite(A * q, order, scale) *
                        pochhammer_infinite_inverse(A * q / E, order, scale) * hyper_sum(t, order, scale);
  return {lhs, rhs};
}

/// Terminating 8phi7 against the prefactor times the 4phi3.
template <class R>
SeriesPair<R> watson_finite_sides(const WatsonParams<R>& w, int order, int scale) {
  using detail::qpow;
  const Monomial<R> q = qpow<R>(1, scale);
  const Monomial<R>&A = w.A, &B = w.B, &C = w.C, &D = w.D, &E = w.E;
  const int n = w.n;
  const Monomial<R> qn = qpow<R>(-n, scale);
  TermSpec<R> l;
  l.x = A * A * qpow<R>(n + 2, scale) / (B * C * D * E);
  l.num = {{A}, {A * qpow<R>(2, scale), 2}, {B}, {C}, {D}, {E}, {qn}};
  l.den = {{q}, {A, 2}, {A * q / B}, {A * q / C}, {A * q / D}, {A * q / E}, {A * qpow<R>(n + 1, scale)}};
  l.max_terms = n + 1;
  const Series<R> lhs = hyper_sum(l, order, scale);

  TermSpec<R> r;
  r.x = q;
  r.num = {{A * q / (B * C)}, {D}, {E}, {qn}};
  r.den = {{q}, {A * q / B}, {A * q / C}, {D * E * qn / A}};
  r.max_terms = n + 1;
  const Series<R> pre = pochhammer_finite(A * q, n, order, scale) * pochhammer_finite(A * q / (D * E), n, order, scale) /
                        (pochhammer_finite(A * q / D, n, order, scale) * pochhammer_finite(A * q / E, n, order, scale));
  return {lhs, pre * hyper_sum(r, order, scale)};
}

/// (middle, right) of the first limit display: the single sum and the
/// very-well-poised sum at A = c/d^2, C = -c/ad, E = -c/bd.
template <class R>
SeriesPair<R> wat1_sides(const HParams<R>& p, int order) {
  using detail::qpow;
  const int s = p.scale;
  const Monomial<R> q = qpow<R>(1, s);
  const Monomial<R> &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Monomial<R> aqd = -(a * q / d), bqd = -(b * q / d);
  TermSpec<R> m;
  m.x = b * q / d;
  m.quad2 = 1;
  m.lin2 = -1;
  m.num = {{-(c / (b * d))}};
  m.den = {{q}, {aqd}};
  const Series<R> middle = pochhammer_infinite(aqd, order, s) * hyper_sum(m, order, s);
  const Monomial<R> A = c / (d * d);
  const Series<R> sum = detail::watson_lhs_sum(A, -(c / (a * d)), -(c / (b * d)), -(a * b / (d * d)), aqd, bqd, order, s);
  const Series<R> rhs = pochhammer_infinite(aqd, order, s) * pochhammer_infinite(bqd, order, s) *
                        pochhammer_infinite_inverse(A * q, order, s) * sum;
  return {middle, rhs};
}

template <class R>
SeriesPair<R> wat2_sides(const HParams<R>& p, int order) {
  using detail::qpow;
  const int s = p.scale;
  const Monomial<R> q = qpow<R>(1, s), q2 = qpow<R>(2, s);
  const Monomial<R> &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Monomial<R> aqd = -(a * q2 / d), bqd = -(b * q2 / d);
  const Series<R> pre = detail::sum_of<R>({c / d, -(a * b * q / d)}, order, s);
  TermSpec<R> m;
  m.x = b * q2 / d;
  m.quad2 = 1;
  m.lin2 = -1;
  m.num = {{-(c / (b * d))}};
  m.den = {{q}, {aqd}};
  const Series<R> middle = pre * pochhammer_infinite(aqd, order, s) * hyper_sum(m, order, s);
  const Monomial<R> A = c * q / (d * d);
  const Series<R> sum =
      detail::watson_lhs_sum(A, -(c / (a * d)), -(c / (b * d)), -(a * b * q2 / (d * d)), aqd, bqd, order, s);
  const Series<R> rhs = pre * pochhammer_infinite(aqd, order, s) * pochhammer_infinite(bqd, order, s) *
                        pochhammer_infinite_inverse(A * q, order, s) * sum;
  return {middle, rhs};
}

// Numeric mode.

/// P(a, x, q) summed until the terms vanish in double precision.
CF64 numeric_P(CF64 a, CF64 x, CF64 q);

struct Theorem11Result {
  CF64 lhs;
  CF64 rhs;
  double diff = 0;
  int depth = 0;
  bool pass = false;
};

/// The finite fraction 1/(w+1/w+q) - 1/(w+1/w+q^2) - ... with mk+i-1 partial
/// quotients against the quotient of P-values, w = exp(2 pi i/m).
Theorem11Result theorem11_eval(int m, int i, CF64 q, int k, double tol);
bool theorem11_check(int m, int i, CF64 q, int k, double tol);

}  // namespace qcf
