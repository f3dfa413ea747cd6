#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcf/series.hpp"

// All `order` arguments below are truncation orders in t, where q = t^scale.

namespace qcf {

enum class QBinomialForm { Finite, Reciprocal };

template <class R>
using SeriesPair = std::pair<Series<R>, Series<R>>;

namespace detail {

/// 1 - m with m = coeff * t^E normalized to (scalar) * t^shift * (1 - rest),
/// rest having positive exponent or being a pure scalar.
template <class R>
struct NormalizedFactor {
  R scalar{1};
  int shift = 0;
  Monomial<R> rest{R(0), 0};  // multiply the series by (1 - rest)
};

template <class R>
NormalizedFactor<R> normalize_factor(const Monomial<R>& m) {
  NormalizedFactor<R> f;
  if (m.is_zero()) return f;
  if (m.exp > 0) {
    f.rest = m;
  } else if (m.exp == 0) {
    f.scalar = R(1) - m.coeff;
  } else {
    f.scalar = -m.coeff;
    f.shift = m.exp;
    f.rest = Monomial<R>(m.coeff.inverse(), -m.exp);
  }
  return f;
}

/// prod_{i>=0} (1 - z t^(step_t*i)) truncated; z.exp >= 1.
template <class R>
Series<R> poch_inf_t(const Monomial<R>& z, int step_t, int order, int scale) {
  Series<R> s = Series<R>::one(order, scale);
  if (z.is_zero()) return s;
  if (z.exp <= 0 || step_t <= 0)
    throw Error(ErrorKind::NonconvergentFormalProduct,
                "infinite product base needs positive t-valuation, got t^" + std::to_string(z.exp));
  for (int e = z.exp; e <= order; e += step_t) s.mul_binomial(Monomial<R>(z.coeff, e));
  return s;
}

template <class R>
Series<R> poch_inf_inverse_t(const Monomial<R>& z, int step_t, int order, int scale) {
  Series<R> s = Series<R>::one(order, scale);
  if (z.is_zero()) return s;
  if (z.exp <= 0 || step_t <= 0)
    throw Error(ErrorKind::NonconvergentFormalProduct,
                "infinite product base needs positive t-valuation, got t^" + std::to_string(z.exp));
  for (int e = z.exp; e <= order; e += step_t) s.div_binomial(Monomial<R>(z.coeff, e));
  return s;
}

}  // namespace detail

/// (z; q^step)_n = prod_{k<n} (1 - z q^(step*k)).
template <class R>
Series<R> pochhammer_finite(const Monomial<R>& z, int n, int order, int scale, int step = 1) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "pochhammer length must be nonnegative");
  R scalar(1);
  int shift = 0;
  int min_shift = 0;
  for (int k = 0; k < n; ++k) {
    const auto f = detail::normalize_factor(z.times_q(step * k, scale));
    shift += f.shift;
    min_shift = std::min(min_shift, shift);
  }
  // negative shifts need extra working precision before they are undone
  Series<R> s = Series<R>::one(order - min_shift, scale);
  for (int k = 0; k < n; ++k) {
    const auto f = detail::normalize_factor(z.times_q(step * k, scale));
    scalar *= f.scalar;
    if (scalar.is_zero()) return Series<R>(order, scale);
    s.mul_binomial(f.rest);
  }
  return s.shifted(shift).truncated(order).scaled(scalar);
}

/// (z; q^step)_inf. Requires z.exp >= 1.
template <class R>
Series<R> pochhammer_infinite(const Monomial<R>& z, int order, int scale, int step = 1) {
  return detail::poch_inf_t(z, step * scale, order, scale);
}

/// 1/(z; q^step)_inf. Requires z.exp >= 1.
template <class R>
Series<R> pochhammer_infinite_inverse(const Monomial<R>& z, int order, int scale, int step = 1) {
  return detail::poch_inf_inverse_t(z, step * scale, order, scale);
}

template <class R>
Series<R> gaussian_binomial(int n, int m, int order, int scale) {
  Series<R> s(order, scale);
  if (m < 0 || n < 0 || m > n) return s;
  s = Series<R>::one(order, scale);
  for (int i = 1; i <= m; ++i) {
    s.mul_binomial(Monomial<R>(R(1), (n - m + i) * scale));
    s.div_binomial(Monomial<R>(R(1), i * scale));
  }
  return s;
}

/// (q^(m(n-m)) [n m]_{1/q}, [n m]_q). The left side substitutes q -> 1/q in
/// the exact polynomial, i.e. reverses its coefficients at degree m(n-m).
template <class R>
SeriesPair<R> gaussian_binomial_qinv_sides(int n, int m, int order, int scale) {
  if (m < 0 || m > n) throw Error(ErrorKind::InvalidArgument, "need 0 <= m <= n");
  const int deg = m * (n - m) * scale;
  const Series<R> p = gaussian_binomial<R>(n, m, std::max(order, deg), scale);
  if (p.degree() > deg) throw Error(ErrorKind::RecurrenceViolation, "Gaussian polynomial exceeds its degree");
  Series<R> lhs(std::max(order, deg), scale);
  for (int k = 0; k <= deg; ++k) lhs[deg - k] = p[k];
  return {lhs.truncated(order), p.truncated(order)};
}

template <class R>
bool gaussian_binomial_qinv_check(int n, int m, int order, int scale = 1) {
  const auto [lhs, rhs] = gaussian_binomial_qinv_sides<R>(n, m, order, scale);
  return lhs == rhs;
}

/// Finite: (z;q)_N against sum_j [N j] (-1)^j z^j q^(j(j-1)/2).
/// Reciprocal: 1/(z;q)_N against sum_j [N+j-1 j] z^j; needs z.exp >= 1.
template <class R>
SeriesPair<R> qbinomial_theorem_sides(const Monomial<R>& z, int N, QBinomialForm which, int order,
                                      int scale) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be nonnegative");
  if (which == QBinomialForm::Finite) {
    Series<R> lhs = pochhammer_finite(z, N, order, scale);
    Series<R> rhs(order, scale);
    for (int j = 0; j <= N; ++j) {
      const Monomial<R> w = (-z).pow(j).times_q(j * (j - 1) / 2, scale);
      if (w.exp > order && !w.is_zero()) continue;
      rhs += gaussian_binomial<R>(N, j, order, scale) * w;
    }
    return {lhs, rhs};
  }
  if (z.exp < 1 && !z.is_zero())
    throw Error(ErrorKind::NonconvergentFormalProduct, "reciprocal q-binomial needs z with positive valuation");
  Series<R> lhs = pochhammer_finite(z, N, order, scale).inverse();
  Series<R> rhs(order, scale);
  for (int j = 0; z.is_zero() ? j == 0 : j * z.exp <= order; ++j)
    rhs += gaussian_binomial<R>(N + j - 1, j, order, scale) * z.pow(j);
  return {lhs, rhs};
}

/// (-hz;h^2)_inf (-h/z;h^2)_inf (h^2;h^2)_inf against sum_n z^n h^(n^2),
/// with h = t^h_exp (default h = q).
template <class R>
SeriesPair<R> jacobi_triple_product_sides(const Monomial<R>& z, int order, int scale, int h_exp = 0) {
  if (h_exp == 0) h_exp = scale;
  if (z.is_zero()) throw Error(ErrorKind::DegenerateSpecialization, "z must be nonzero");
  const Monomial<R> h(R(1), h_exp);
  Series<R> lhs = detail::poch_inf_t(-(h * z), 2 * h_exp, order, scale);
  lhs *= detail::poch_inf_t(-(h / z), 2 * h_exp, order, scale);
  lhs *= detail::poch_inf_t(Monomial<R>(R(1), 2 * h_exp), 2 * h_exp, order, scale);
  Series<R> rhs(order, scale);
  for (int n = 0;; ++n) {
    bool any = false;
    for (int sgn : {1, -1}) {
      if (n == 0 && sgn < 0) continue;
      const long e = static_cast<long>(sgn) * n * z.exp + static_cast<long>(n) * n * h_exp;
      if (e < 0)
        throw Error(ErrorKind::NonconvergentFormalProduct, "theta sum has negative exponents");
      if (e > order) continue;
      any = true;
      rhs += Series<R>::monomial(z.pow(sgn * n) * h.pow(static_cast<long>(n) * n), order, scale);
    }
    if (!any && static_cast<long>(n) * n * h_exp - static_cast<long>(n) * std::abs(z.exp) > order) break;
  }
  return {lhs, rhs};
}

/// prod_{i < j_mult*j + j_offset} (1 - base q^(step*i)) as a function of the
/// summation index j.
template <class R>
struct PochFactor {
  Monomial<R> base;
  int step = 1;
  int j_mult = 1;
  int j_offset = 0;
};

/// sum_j prefactor * x^j * q^((quad2 j^2 + lin2 j)/2) * prod num / prod den.
template <class R>
struct TermSpec {
  Monomial<R> prefactor{R(1), 0};
  Monomial<R> x{R(1), 0};
  int quad2 = 0;
  int lin2 = 0;
  std::vector<PochFactor<R>> num;
  std::vector<PochFactor<R>> den;
  std::optional<int> max_terms;
};

template <class R>
Series<R> hyper_sum(const TermSpec<R>& spec, int order, int scale);

/// Partial sum of r phi s with the ((-1)^n q^(n(n-1)/2))^(s+1-r) factor,
/// at most `terms` terms.
template <class R>
Series<R> rphis_partial(const std::vector<Monomial<R>>& num, const std::vector<Monomial<R>>& den,
                        const Monomial<R>& x, int terms, int order, int scale) {
  TermSpec<R> spec;
  const int p = static_cast<int>(den.size()) + 1 - static_cast<int>(num.size());
  spec.x = (p % 2 != 0) ? -x : x;
  spec.quad2 = p;
  spec.lin2 = -p;
  for (const auto& a : num) spec.num.push_back({a});
  spec.den.push_back({Monomial<R>(R(1), scale)});
  for (const auto& b : den) spec.den.push_back({b});
  spec.max_terms = terms;
  return hyper_sum(spec, order, scale);
}

namespace detail {

template <class R>
struct FactorCursor {
  const PochFactor<R>* f;
  bool numerator;
  int count(int j) const { return f->j_mult * j + f->j_offset; }
  Monomial<R> at(int i, int scale) const { return f->base.times_q(f->step * i, scale); }
};

}  // namespace detail

template <class R>
Series<R> hyper_sum(const TermSpec<R>& spec, int order, int scale) {
  using detail::FactorCursor;
  if (spec.prefactor.is_zero()) return Series<R>(order, scale);
  if ((spec.quad2 + spec.lin2) % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "q exponent (quad2 j^2 + lin2 j)/2 must be integral");

  std::vector<FactorCursor<R>> factors;
  for (const auto& f : spec.num) factors.push_back({&f, true});
  for (const auto& f : spec.den) factors.push_back({&f, false});
  for (const auto& f : factors)
    if (f.f->j_mult < 0 || f.f->j_offset < 0 || f.f->step < 1)
      throw Error(ErrorKind::InvalidArgument, "bad Pochhammer factor shape");

  auto q_exp = [&](long j) { return scale * (spec.quad2 * j * j + spec.lin2 * j) / 2; };

  // Pass 1: exponents of the leading monomial of every term, and where the sum stops.
  const int cap = spec.max_terms.value_or(8 * (order + 8) + 64);
  std::vector<long> e;
  long shift_total = 0;  // accumulated negative-exponent normalizations
  bool zero_stop = false;
  // factors with index in [lo, count(to_j)), lo = count(from_j) or 0 for the initial block
  auto apply_shifts = [&](int from_j, int to_j, bool initial) {
    for (const auto& f : factors) {
      if (f.f->base.is_zero()) continue;
      const int lo = initial ? 0 : f.count(from_j);
      for (int i = lo; i < f.count(to_j); ++i) {
        const Monomial<R> m = f.at(i, scale);
        if (m.exp < 0) {
          shift_total += f.numerator ? m.exp : -m.exp;
        } else if (m.exp == 0 && m.coeff == R(1)) {
          if (f.numerator) zero_stop = true;
          else throw Error(ErrorKind::ZeroDenominatorFactor, "denominator factor 1 - 1 at index " + std::to_string(i));
        }
      }
    }
  };
  apply_shifts(0, 0, true);
  auto regime_reached = [&](int j) {
    for (const auto& f : factors) {
      if (f.f->base.is_zero() || f.f->j_mult == 0) continue;
      if (f.at(f.count(j), scale).exp <= 0) return false;
    }
    return true;
  };
  const bool x_zero = spec.x.is_zero();
  int J = 0;
  bool terminated = false;
  for (int j = 0; j < cap; ++j) {
    if (zero_stop) { terminated = true; break; }
    if (j >= 1 && x_zero) { terminated = true; break; }
    const long ej = spec.prefactor.exp + static_cast<long>(j) * spec.x.exp + q_exp(j) + shift_total;
    if (regime_reached(j) && ej > order) {
      const long d1 = spec.x.exp + q_exp(j + 1) - q_exp(j);
      if (d1 > 0 && spec.quad2 >= 0) {
        // margin: the next two terms are past the truncation as well
        const long e1 = ej + d1;
        const long e2 = e1 + spec.x.exp + q_exp(j + 2) - q_exp(j + 1);
        if (e1 <= order || e2 <= order)
          throw Error(ErrorKind::DegenerateSpecialization, "summation margin contributes");
        terminated = true;
        break;
      }
    }
    e.push_back(ej);
    J = j + 1;
    apply_shifts(j, j + 1, false);
  }
  if (!terminated && !spec.max_terms)
    throw Error(ErrorKind::DegenerateSpecialization, "summand valuations do not increase");

  long min_e = 0;
  for (long x : e) min_e = std::min(min_e, x);
  const int L = static_cast<int>(-min_e);
  const int W = order + L;

  // Pass 2: scalar * t^e_j * S_j with S_j a unit series.
  std::vector<R> acc(static_cast<std::size_t>(W) + 1);
  Series<R> S = Series<R>::one(W, scale);
  R kappa = spec.prefactor.coeff;
  auto apply = [&](int from_j, int to_j, bool initial) {
    for (const auto& f : factors) {
      if (f.f->base.is_zero()) continue;
      const int lo = initial ? 0 : f.count(from_j);
      for (int i = lo; i < f.count(to_j); ++i) {
        const auto nf = detail::normalize_factor(f.at(i, scale));
        if (f.numerator) {
          kappa *= nf.scalar;
          S.mul_binomial(nf.rest);
        } else {
          kappa /= nf.scalar;
          S.div_binomial(nf.rest);
        }
      }
    }
  };
  apply(0, 0, true);
  for (int j = 0; j < J; ++j) {
    if (j > 0) {
      kappa *= spec.x.coeff;
      apply(j - 1, j, false);
    }
    if (kappa.is_zero()) break;
    const long ej = e[j];
    if (ej > order) continue;
    const int base = static_cast<int>(ej) + L;
    for (int k = 0; base + k <= W; ++k)
      if (!S[k].is_zero()) acc[base + k] += kappa * S[k];
  }
  for (int k = 0; k < L; ++k)
    if (!acc[k].is_zero())
      throw Error(ErrorKind::DegenerateSpecialization, "sum has a nonzero negative-power part");
  Series<R> out(order, scale);
  for (int k = 0; k <= order; ++k) out[k] = std::move(acc[k + L]);
  return out;
}

/// P(a,x,q) = sum_j q^(j(j+1)/2) a^j x^j / ((q)_j (x^2 q)_j).
template <class R>
Series<R> series_P(const Monomial<R>& a, const Monomial<R>& x, int order, int scale) {
  TermSpec<R> s;
  s.x = a * x;
  s.quad2 = 1;
  s.lin2 = 1;
  s.den = {{Monomial<R>(R(1), scale)}, {(x * x).times_q(1, scale)}};
  return hyper_sum(s, order, scale);
}

}  // namespace qcf
