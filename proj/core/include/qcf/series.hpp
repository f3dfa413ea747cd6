#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcf/error.hpp"
#include "qcf/scalar.hpp"

namespace qcf {

template <class R>
class Series;

/// coefficient * t^exp. A zero coefficient makes the exponent irrelevant.
template <class R>
struct Monomial {
  R coeff{};
  int exp = 0;

  Monomial() = default;
  Monomial(R c, int e = 0) : coeff(std::move(c)), exp(e) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return coeff.is_zero(); }

  Monomial operator-() const { return {-coeff, exp}; }
  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.coeff * y.coeff, x.exp + y.exp};
  }
  friend Monomial operator/(const Monomial& x, const Monomial& y) {
    if (y.is_zero()) throw Error(ErrorKind::DegenerateSpecialization, "division by a zero parameter");
    return {x.coeff / y.coeff, x.exp - y.exp};
  }
  friend bool operator==(const Monomial& x, const Monomial& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.exp == y.exp && x.coeff == y.coeff;
  }

  Monomial pow(long n) const {
    if (n < 0) return Monomial(R(1)) / pow(-n);
    Monomial r(R(1));
    for (long i = 0; i < n; ++i) r = r * *this;
    return r;
  }
  /// Multiply by q^k at the given scale.
  Monomial times_q(int k, int scale) const { return {coeff, exp + k * scale}; }

  template <class S>
  Monomial<S> cast() const { return {S(coeff), exp}; }
};

/// Truncated power series in t, exact modulo t^(order+1), with q = t^scale.
template <class R>
class Series {
 public:
  Series() : Series(0, 1) {}
  Series(int order, int scale) : c_(static_cast<std::size_t>(order) + 1), order_(order), scale_(scale) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
    if (scale < 1) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  }
  Series(std::vector<R> coeffs, int scale) : c_(std::move(coeffs)), scale_(scale) {
    if (c_.empty()) c_.emplace_back();
    order_ = static_cast<int>(c_.size()) - 1;
  }

  static Series constant(R value, int order, int scale) {
    Series s(order, scale);
    s.c_[0] = std::move(value);
    return s;
  }
  static Series one(int order, int scale) { return constant(R(1), order, scale); }
  static Series monomial(const Monomial<R>& m, int order, int scale) {
    Series s(order, scale);
    if (m.is_zero()) return s;
    if (m.exp < 0) throw Error(ErrorKind::DegenerateSpecialization, "negative power of t in a power series");
    if (m.exp <= order) s.c_[m.exp] = m.coeff;
    return s;
  }
  /// 1 - m as a series.
  static Series binomial(const Monomial<R>& m, int order, int scale) {
    Series s = one(order, scale);
    return s.mul_binomial(m);
  }

  int order() const { return order_; }
  int scale() const { return scale_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int k) const { return c_[k]; }
  R& operator[](int k) { return c_[k]; }
  /// Coefficient of t^k, zero beyond the stored range.
  R at(int k) const { return (k >= 0 && k <= order_) ? c_[k] : R(0); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
  }
  /// Index of the first nonzero coefficient, or order+1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= order_; ++k)
      if (!c_[k].is_zero()) return k;
    return order_ + 1;
  }
  /// Highest nonzero index, -1 for zero.
  int degree() const {
    for (int k = order_; k >= 0; --k)
      if (!c_[k].is_zero()) return k;
    return -1;
  }

  Series truncated(int order) const {
    Series r(std::min(order, order_), scale_);
    std::copy(c_.begin(), c_.begin() + r.order_ + 1, r.c_.begin());
    return r;
  }
  /// Zero-pads to a larger order. Only meaningful for polynomials known to be exact.
  Series padded(int order) const {
    Series r(std::max(order, order_), scale_);
    std::copy(c_.begin(), c_.end(), r.c_.begin());
    return r;
  }

  Series operator-() const {
    Series r(order_, scale_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
  }
  Series& operator+=(const Series& o) {
    check_scale(o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_scale(o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_scale(b);
    const int n = std::min(a.order_, b.order_);
    Series r(n, a.scale_);
    // iterate the sparser factor in the outer loop
    const Series& x = a.nonzeros(n) <= b.nonzeros(n) ? a : b;
    const Series& y = (&x == &a) ? b : a;
    for (int i = 0; i <= n; ++i) {
      if (x.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (y.c_[j].is_zero()) continue;
        r.c_[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series operator*(const Monomial<R>& m) const {
    if (m.is_zero()) return Series(order_, scale_);
    Series r = shifted(m.exp);
    for (auto& x : r.c_) x *= m.coeff;
    return r;
  }
  Series scaled(const R& s) const {
    Series r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Multiply by t^k. For k < 0 the dropped coefficients must vanish and the
  /// order shrinks by |k|.
  Series shifted(int k) const {
    if (k >= 0) {
      Series r(order_, scale_);
      for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
      return r;
    }
    const int d = -k;
    for (int i = 0; i < d && i <= order_; ++i)
      if (!c_[i].is_zero())
        throw Error(ErrorKind::DegenerateSpecialization, "negative power of t in a power series");
    if (d > order_) throw Error(ErrorKind::DegenerateSpecialization, "shift exceeds truncation order");
    Series r(order_ - d, scale_);
    for (int i = d; i <= order_; ++i) r.c_[i - d] = c_[i];
    return r;
  }

  /// In place *(1 - m), m.exp >= 1 or a scalar monomial.
  Series& mul_binomial(const Monomial<R>& m) {
    if (m.is_zero()) return *this;
    if (m.exp < 0) throw Error(ErrorKind::InvalidArgument, "mul_binomial needs a nonnegative exponent");
    if (m.exp == 0) {
      const R f = R(1) - m.coeff;
      for (auto& x : c_) x *= f;
      return *this;
    }
    for (int k = order_; k >= m.exp; --k)
      if (!c_[k - m.exp].is_zero()) c_[k] -= m.coeff * c_[k - m.exp];
    return *this;
  }
  /// In place /(1 - m).
  Series& div_binomial(const Monomial<R>& m) {
    if (m.is_zero()) return *this;
    if (m.exp < 0) throw Error(ErrorKind::InvalidArgument, "div_binomial needs a nonnegative exponent");
    if (m.exp == 0) {
      const R f = R(1) - m.coeff;
      if (f.is_zero()) throw Error(ErrorKind::ZeroDenominatorFactor, "factor 1 - 1 in a denominator");
      const R g = f.inverse();
      for (auto& x : c_) x *= g;
      return *this;
    }
    for (int k = m.exp; k <= order_; ++k)
      if (!c_[k - m.exp].is_zero()) c_[k] += m.coeff * c_[k - m.exp];
    return *this;
  }

  Series inverse() const {
    if (c_[0].is_zero()) throw Error(ErrorKind::NonInvertibleConstantTerm, "constant term is zero");
    Series r(order_, scale_);
    const R inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      R acc(0);
      for (int k = 1; k <= n; ++k)
        if (!c_[k].is_zero()) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -acc * inv0;
    }
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) {
    a.check_scale(b);
    const int n = std::min(a.order_, b.order_);
    return a.truncated(n) * b.truncated(n).inverse();
  }

  /// t -> t^k; the order grows by the factor k.
  Series substitute_power(int k) const {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "substitution power must be positive");
    Series r(order_ * k, scale_);
    for (int i = 0; i <= order_; ++i) r.c_[i * k] = c_[i];
    return r;
  }
  /// Same coefficients, new declared scale.
  Series with_scale(int scale) const {
    Series r(*this);
    r.scale_ = scale;
    return r;
  }

  template <class S>
  Series<S> cast() const {
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.emplace_back(x);
    return Series<S>(std::move(v), scale_);
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.scale_ == b.scale_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

  std::string str() const;

 private:
  void check_scale(const Series& o) const {
    if (scale_ != o.scale_)
      throw Error(ErrorKind::ScaleMismatch,
                  "scale " + std::to_string(scale_) + " vs " + std::to_string(o.scale_));
  }
  int nonzeros(int n) const {
    int k = 0;
    for (int i = 0; i <= n; ++i) k += !c_[i].is_zero();
    return k;
  }

  std::vector<R> c_;
  int order_ = 0;
  int scale_ = 1;
};

template <class R>
std::string Series<R>::str() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].str() + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(order_ + 1) + ")";
}

template <class R>
Series<R> substitute_power(const Series<R>& a, int k) {
  return a.substitute_power(k);
}

}  // namespace qcf
