#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "qcf/cfrac.hpp"
#include "qcf/objects.hpp"
#include "support.hpp"

using namespace qcf;
using qt::M;
using qt::r;
using qt::S;
using CF = ContinuedFraction<S>;
using NF = ContinuedFraction<CF64>;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

S one(int O) { return S::one(O, 1); }
S mono(int c, int k, int O) { return S::monomial(M(r(c), k), O, 1); }

// terms drawn up front so the generator is a pure function of n
CF random_fraction(std::uint64_t seed, int O, bool unit_b) {
  qt::Sampler sampler(seed);
  std::vector<std::pair<S, S>> terms(1, {S(O, 1), S(O, 1)});
  CF cf;
  cf.b0 = sampler.series(O);
  for (int n = 1; n <= 40; ++n) {
    S a = sampler.series(O);
    if (a.is_zero()) a[0] = r(1);
    terms.emplace_back(a, sampler.series(O, 1, unit_b));
  }
  cf.term = [terms](int n) { return terms.at(n); };
  return cf;
}

CF q2q3(int O) {
  return CF{S(O, 1), [O](int n) {
              if (n == 1) return std::pair{one(O), one(O)};
              return std::pair{mono(-1, 2 * n - 3, O), one(O) + mono(1, n - 1, O)};
            }};
}

CF rogers_ramanujan(int O) {
  return CF{one(O), [O](int n) { return std::pair{mono(1, n, O), one(O)}; }};
}

bool same_ratio(const S& A, const S& B, const S& A2, const S& B2) { return A * B2 == A2 * B; }

NF constant_nf(double a, double b) {
  return NF{CF64(0.0), [a, b](int) { return std::pair{CF64(a), CF64(b)}; }};
}

// minimal solution by backward recurrence from far out, normalized at -1
std::function<CF64(int)> minimal_solution(const NF& cf, int far) {
  std::vector<CF64> g(far + 3);
  g[far + 2] = CF64(0.0);
  g[far + 1] = CF64(1e-200);
  for (int n = far + 1; n >= 1; --n) {
    const auto [a, b] = cf.term(n);
    // index shift by one: g[n + 1] holds G_n
    g[n - 1] = (g[n + 1] - b * g[n]) / a;
    const double s = g[n - 1].abs();
    if (s > 1e100)
      for (auto& x : g) x = x / CF64(s);
  }
  const CF64 norm = g[0];
  for (auto& x : g) x = x / norm;
  return [g](int n) { return g[n + 1]; };
}

}  // namespace

TEST_CASE("determinant formula") {
  const int O = 25;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CF cf = random_fraction(seed, O, false);
    const auto pairs = convergents(cf, 20);
    S prod = one(O);
    for (int N = 1; N <= 20; ++N) {
      prod *= cf.term(N).first;
      const S det = pairs[N].A * pairs[N - 1].B - pairs[N - 1].A * pairs[N].B;
      CHECK(det == (N % 2 == 1 ? prod : -prod));
      CHECK(pairs[N].index == N);
      const auto [a, b] = cf.term(N);
      CHECK(pairs[N].A == b * pairs[N - 1].A + a * (N >= 2 ? pairs[N - 2].A : one(O)));
    }
  }
}

TEST_CASE("convergent examples") {
  const int O = 6;
  const auto p = convergents(q2q3(O), 2);
  const S ratio = p[2].A / p[2].B;
  CHECK(ratio.truncated(2) == qt::from_ints({1, 1, 0}));
  CHECK(p[0].A.is_zero());
  CHECK(p[0].B == one(O));
  CHECK(p[1].A == one(O));
  CHECK(p[1].B == one(O));

  // a_1 = 1 and nothing after it: every ratio is 1/b_1
  const S b1 = qt::from_ints({3, 1, 0, 0, 0, 0, 0});
  const CF flat{S(O, 1), [b1, O](int n) { return std::pair{n == 1 ? one(O) : S(O, 1), n == 1 ? b1 : one(O)}; }};
  for (const auto& c : convergents(flat, 6))
    if (c.index >= 1) CHECK(c.A / c.B == b1.inverse());

  const NF numeric{CF64(0.0), [](int n) { return std::pair{CF64(n == 3 ? 0.0 : 1.0), CF64(1.0)}; }};
  CHECK(kind_of([&] { (void)convergents(numeric, 5); }) == ErrorKind::ZeroPartialNumerator);
  CHECK(kind_of([] { (void)convergents(q2q3(4), -1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("amusing fraction ratio is constant") {
  const int O = 30;
  qt::Sampler s(31);
  for (int i = 0; i < 5; ++i) {
    const Rat a = s.value(), b = s.value(), d = s.value();
    const HParams<Rat> p{M(a), M(-b), M(b * d), M(d), 1};
    const auto v = cf_value(cf_H1(p, O), O);
    CHECK(v.value == S::constant((r(1) + b).inverse(), O, 1));
  }
}

TEST_CASE("odd part") {
  const int O = 20;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const CF cf = random_fraction(100 + seed, O, true);
    const CF odd = odd_part(cf);
    const auto full = convergents(cf, 17);
    const auto half = convergents(odd, 8);
    for (int k = 0; k <= 8; ++k) CHECK(same_ratio(half[k].A, half[k].B, full[2 * k + 1].A, full[2 * k + 1].B));
  }

  // H2 with series parameters: odd part reproduces the contracted terms
  const M a(r(2, 3)), b(r(-5, 2)), e(r(1, 7));
  auto term = [&](int n) {
    const int k = (n + 1) / 2;
    const S x = n % 2 == 1 ? S::monomial(a * M(r(1), k), O, 1)
                           : S::monomial(b * M(r(1), k), O, 1) + S::constant(e.coeff, O, 1);
    return std::pair{x, one(O)};
  };
  const CF h2{one(O), term};
  const CF odd = odd_part(h2);
  auto qk = [&](const M& m, int k) { return S::monomial(m * M(r(1), k), O, 1); };
  CHECK(odd.b0 == one(O) + qk(a, 1));
  for (int k = 1; k <= 4; ++k) {
    const auto [num, den] = odd.term(k);
    CHECK(num == -(qk(a, k) * (qk(b, k) + S::constant(e.coeff, O, 1))));
    CHECK(den == qk(a, k + 1) + qk(b, k) + S::constant(e.coeff + r(1), O, 1));
  }
  const auto full = convergents(h2, 17);
  const auto half = convergents(odd, 8);
  for (int k = 0; k <= 8; ++k) CHECK(same_ratio(half[k].A, half[k].B, full[2 * k + 1].A, full[2 * k + 1].B));

  // only a_1 survives
  const CF lone{S::constant(r(2), O, 1), [O](int n) {
                  return std::pair{n == 1 ? S::constant(r(3), O, 1) : S(O, 1), S::constant(r(5), O, 1)};
                }};
  for (const auto& c : convergents(odd_part(lone), 5)) CHECK(c.A / c.B == S::constant(r(13, 5), O, 1));

  const CF bad{one(O), [O](int n) { return std::pair{one(O), n == 3 ? S(O, 1) : one(O)}; }};
  CHECK(kind_of([&] { (void)convergents(odd_part(bad), 3); }) == ErrorKind::ZeroOddPartialDenominator);
}

TEST_CASE("equivalence transformations") {
  const int O = 15;
  const CF cf = random_fraction(41, O, true);
  const CF same = equivalence_transform<S>(cf, [O](int) { return one(O); });
  for (int n = 1; n <= 10; ++n) {
    CHECK(same.term(n).first == cf.term(n).first);
    CHECK(same.term(n).second == cf.term(n).second);
  }
  qt::Sampler s(42);
  std::vector<S> mult;
  for (int n = 0; n <= 10; ++n) mult.push_back(s.series(O, 1, true));
  const CF scaled = equivalence_transform<S>(cf, [mult](int n) { return mult[n]; });
  const auto x = convergents(cf, 10), y = convergents(scaled, 10);
  for (int n = 0; n <= 10; ++n) CHECK(same_ratio(x[n].A, x[n].B, y[n].A, y[n].B));
  const CF zero = equivalence_transform<S>(cf, [O](int n) { return n == 4 ? S(O, 1) : one(O); });
  CHECK(kind_of([&] { (void)convergents(zero, 6); }) == ErrorKind::ZeroMultiplier);
}

TEST_CASE("stabilization order") {
  const int O = 40;
  const CF rr = rogers_ramanujan(O);
  const auto pairs = convergents(rr, 45);
  std::vector<ConvergentPair<S>> dup = {pairs[5], pairs[5]};
  dup[1].index = 6;
  CHECK(stabilization_order(dup) == O);
  CHECK(kind_of([&] { (void)stabilization_order(std::vector<ConvergentPair<S>>{pairs[0]}); }) ==
        ErrorKind::InvalidArgument);

  // K(q) convergent N agrees with the product limit through at least N - 1
  const S limit = pochhammer_infinite(M(r(1), 2), O, 1, 5) * pochhammer_infinite(M(r(1), 3), O, 1, 5) *
                  pochhammer_infinite_inverse(M(r(1), 1), O, 1, 5) * pochhammer_infinite_inverse(M(r(1), 4), O, 1, 5);
  int last = -1;
  for (int N = 1; N <= 40; ++N) {
    const S ratio = pairs[N].A / pairs[N].B;
    const int agree = (ratio - limit).valuation() - 1;
    CHECK(agree >= std::min(N - 1, O));
    CHECK(pairs[N].stable_order >= last);
    CHECK(pairs[N].stable_order <= agree);
    last = pairs[N].stable_order;
    CHECK(stabilization_lower_bound(rr, N) <= std::max(pairs[N].stable_order, 0));
  }

  const auto qq = convergents(q2q3(O), 40);
  last = -1;
  for (int N = 1; N <= 40; ++N) {
    CHECK(qq[N].stable_order >= last);
    last = qq[N].stable_order;
  }
  CHECK(last >= 20);

  const CF zero_b{S(O, 1), [O](int) { return std::pair{one(O), mono(1, 1, O)}; }};
  std::vector<ConvergentPair<S>> zb = {{one(O), mono(1, 1, O), 1, -1}, {one(O), one(O), 2, -1}};
  CHECK(kind_of([&] { (void)stabilization_order(zb); }) == ErrorKind::NonInvertibleConstantTerm);
}

TEST_CASE("limits of the engine") {
  const int O = 30;
  const auto v = cf_value(q2q3(O), O);
  const S expect = pochhammer_infinite(M(r(1), 2), O, 1, 3) * pochhammer_infinite_inverse(M(r(1), 1), O, 1, 3);
  CHECK(v.value == expect);
  CHECK(v.stable_order >= O);
  const auto sl = cf_separate_limits(q2q3(O), O);
  CHECK(sl.A == pochhammer_infinite_inverse(M(r(1), 1), O, 1, 3));
  CHECK(sl.B == pochhammer_infinite_inverse(M(r(1), 2), O, 1, 3));
  // 1/(1 + 1/(1 + ...)) never gains valuation
  const CF golden{S(O, 1), [O](int) { return std::pair{one(O), one(O)}; }};
  CHECK(kind_of([&] { (void)cf_value(golden, O, 60); }) == ErrorKind::DegenerateSpecialization);
}

TEST_CASE("Worpitzky check") {
  CHECK(worpitzky_check(constant_nf(0.2, 1.0), 100));
  const NF big{CF64(0.0), [](int n) { return std::pair{CF64(n == 1 ? 1.0 : 0.1), CF64(1.0)}; }};
  CHECK_FALSE(worpitzky_check(big, 10));
  // a = 0.4, b = 2 normalizes to c_1 = 0.2, c_n = 0.1; a = 0.8 gives c_1 = 0.4
  CHECK(worpitzky_check(constant_nf(0.4, 2.0), 50));
  CHECK_FALSE(worpitzky_check(constant_nf(0.8, 2.0), 50));
  const double a = 0.5, b = 0.5, e = 0.2, q = 0.1;
  const NF h2{CF64(1.0), [=](int n) {
                const int k = (n + 1) / 2;
                const double qk = std::pow(q, k);
                return std::pair{CF64(n % 2 == 1 ? a * qk : b * qk + e), CF64(1.0)};
              }};
  CHECK(worpitzky_check(h2, 100));
  const NF hole{CF64(0.0), [](int n) { return std::pair{CF64(0.1), CF64(n == 4 ? 0.0 : 1.0)}; }};
  CHECK(kind_of([&] { (void)worpitzky_check(hole, 10); }) == ErrorKind::NormalizationImpossible);
}

TEST_CASE("Pincherle check") {
  // a_n = 2, b_n = 1: fixed point of x = 2/(1 + x) is 1, minimal solution (-1)^n
  const NF c = constant_nf(2.0, 1.0);
  auto alt = [](int n) { return CF64(n % 2 == 0 ? 1.0 : -1.0); };
  CHECK(pincherle_limit_check(c, alt, 60, 1e-10));
  CHECK(std::abs(cf_eval_backward(c, 60).re() - 1.0) < 1e-12);
  // the dominant solution 2^n does not qualify
  CHECK_FALSE(pincherle_limit_check(c, [](int n) { return CF64(std::pow(2.0, n)); }, 60, 1e-10));
  CHECK(kind_of([&] { (void)pincherle_limit_check(c, [](int) { return CF64(1.0); }, 20, 1e-10); }) ==
        ErrorKind::RecurrenceViolation);

  // amusing fraction at a = 0.3, b = 0.4, d = 1, q = 0.5 converges to 1/(1 + b)
  const double a = 0.3, b = 0.4, d = 1.0, q = 0.5;
  const NF amusing{CF64(0.0), [=](int n) {
                     if (n == 1) return std::pair{CF64(1.0), CF64(1.0)};
                     const int k = n - 2;
                     return std::pair{CF64(a * b * std::pow(q, 2 * k + 1) + b * d * std::pow(q, k)),
                                      CF64((a - b) * std::pow(q, k + 1) + d)};
                   }};
  const auto G = minimal_solution(amusing, 120);
  CHECK(pincherle_limit_check(amusing, G, 60, 1e-10));
  CHECK((-(G(0) / G(-1)) - CF64(1.0 / (1.0 + b))).abs() < 1e-10);
}
