#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qcf/series.hpp"

// Oracles here use plain integer arithmetic and never call into the library's
// q-series code.

namespace qt {

using qcf::Rat;
using M = qcf::Monomial<Rat>;
using S = qcf::Series<Rat>;

inline Rat r(long n, long d = 1) { return Rat(n, d); }

inline S from_ints(const std::vector<long long>& c, int scale = 1) {
  std::vector<Rat> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return S(std::move(v), scale);
}

// number of partitions of n into parts p with allowed(p), n <= nmax
inline std::vector<long long> count_partitions(int nmax, const std::function<bool(int)>& allowed) {
  std::vector<long long> p(nmax + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= nmax; ++part) {
    if (!allowed(part)) continue;
    for (int n = part; n <= nmax; ++n) p[n] += p[n - part];
  }
  return p;
}

// coefficients of prod (1 - q^k), k >= 1, via the pentagonal numbers
inline std::vector<long long> euler_product(int nmax) {
  std::vector<long long> c(nmax + 1, 0);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long s : {k, -k}) {
      if (k == 0 && s == 0 && any) continue;
      const long e = s * (3 * s - 1) / 2;
      if (e > nmax) continue;
      any = true;
      c[e] += (k % 2 == 0) ? 1 : -1;
    }
    if (!any) break;
  }
  return c;
}

// [n m]_q as the count of m-subsets of {1..n} by sum - m(m+1)/2
inline std::vector<long long> gaussian_by_subsets(int n, int m) {
  std::vector<long long> c(m * (n - m) + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += i + 1;
    ++c[sum - m * (m + 1) / 2];
  }
  return c;
}

// sum_n z^n q^(n^2) for z = +-1
inline std::vector<long long> theta(int nmax, int z) {
  std::vector<long long> c(nmax + 1, 0);
  for (long n = -nmax; n <= nmax; ++n)
    if (n * n <= nmax) c[n * n] += (z < 0 && (n % 2 != 0)) ? -1 : 1;
  return c;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // num/den with |num|, den <= 7, never 0 or +-1
  Rat value() {
    std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
    while (true) {
      const Rat x(num(rng_), den(rng_));
      if (!x.is_zero() && !(x.abs() == Rat(1))) return x;
    }
  }
  Rat any() {
    std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
    return Rat(num(rng_), den(rng_));
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  S series(int order, int scale = 1, bool unit = false) {
    S s(order, scale);
    for (int k = 0; k <= order; ++k) s[k] = pick(0, 2) == 0 ? Rat(0) : any();
    if (unit) s[0] = value();
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qt
