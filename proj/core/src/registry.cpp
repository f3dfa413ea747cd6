#include "qcf/registry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>

#include "qcf/objects.hpp"

namespace qcf {

namespace {

using M = Monomial<Rat>;
using S = Series<Rat>;
using ME = Monomial<EisRat>;
using SE = Series<EisRat>;
using CF = ContinuedFraction<S>;

M q_to(int k, int scale) { return M(Rat(1), k * scale); }
S one(int T, int s) { return S::one(T, s); }
S mono(const M& m, int T, int s) { return S::monomial(m, T, s); }

CheckPair pair(std::string label, S lhs, S rhs) {
  return {std::move(label), SeriesPair<Rat>{std::move(lhs), std::move(rhs)}};
}
CheckPair pair(std::string label, SE lhs, SE rhs) {
  return {std::move(label), SeriesPair<EisRat>{std::move(lhs), std::move(rhs)}};
}

// prod_r (q^r; q^m)_inf and its inverse
S prod(std::initializer_list<int> rs, int m, int T, int s) {
  S out = one(T, s);
  for (int r : rs) out *= pochhammer_infinite(q_to(r, s), T, s, m);
  return out;
}
S prod_inv(std::initializer_list<int> rs, int m, int T, int s) {
  S out = one(T, s);
  for (int r : rs) out *= pochhammer_infinite_inverse(q_to(r, s), T, s, m);
  return out;
}

// q-series built at scale 1 and order T/k, read in t^k
S lift(const S& x, int k, int scale) { return x.substitute_power(k).with_scale(scale); }

// largest j with j(j+1)/2 <= n
int tri_bound(int n) {
  int j = 0;
  while ((j + 1) * (j + 2) / 2 <= n) ++j;
  return j;
}

std::vector<DegreeBound> sampled(std::initializer_list<const char*> names, const std::string& reason) {
  std::vector<DegreeBound> out;
  for (const char* n : names) out.push_back({n, std::nullopt, reason});
  return out;
}

auto no_bounds() {
  return [](int) { return std::vector<DegreeBound>{}; };
}

CF fraction(S b0, std::function<std::pair<S, S>(int)> term) { return CF{std::move(b0), std::move(term)}; }

// sum_j x^j q^((j^2 + lin2 j)/2) prod num / ((q)_j prod den)
S qsum(const M& x, int lin2, std::vector<PochFactor<Rat>> num, std::vector<PochFactor<Rat>> den, int T, int s) {
  TermSpec<Rat> t;
  t.x = x;
  t.quad2 = 1;
  t.lin2 = lin2;
  t.num = std::move(num);
  t.den = std::move(den);
  t.den.insert(t.den.begin(), {q_to(1, s)});
  return hyper_sum(t, T, s);
}

S rr_sum(int lin, int T) {
  TermSpec<Rat> t;
  t.quad2 = 2;
  t.lin2 = 2 * lin;
  t.den = {{q_to(1, 1)}};
  return hyper_sum(t, T, 1);
}

// ---- rows ----

IdentityCase rr_sum_product() {
  IdentityCase c;
  c.id = "RR_SUM_PRODUCT";
  c.description = "Rogers-Ramanujan sums equal their mod-5 products, also through the triple product";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    const S P1 = prod_inv({1, 4}, 5, O, 1), P2 = prod_inv({2, 3}, 5, O, 1);
    std::vector<CheckPair> out;
    out.push_back(pair("sum q^(n^2)/(q)_n", rr_sum(0, O), P1));
    out.push_back(pair("sum q^(n^2+n)/(q)_n", rr_sum(1, O), P2));
    const int T = 2 * O;
    const S qinv = pochhammer_infinite_inverse(q_to(1, 2), T, 2);
    const auto th1 = jacobi_triple_product_sides(M(Rat(-1), 1), T, 2, 5);
    const auto th2 = jacobi_triple_product_sides(M(Rat(-1), 3), T, 2, 5);
    out.push_back(pair("theta sum z=-q^(1/2) over (q)_inf", th1.second * qinv, lift(P1, 2, 2)));
    out.push_back(pair("theta product z=-q^(1/2) over (q)_inf", th1.first * qinv, lift(P1, 2, 2)));
    out.push_back(pair("theta sum z=-q^(3/2) over (q)_inf", th2.second * qinv, lift(P2, 2, 2)));
    return out;
  };
  return c;
}

IdentityCase rr_cf() {
  IdentityCase c;
  c.id = "RR_CF";
  c.description = "K(q) = 1 + q/1 + q^2/1 + ...: numerators and denominators converge to the mod-5 products";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    const CF K = fraction(one(O, 1), [O](int n) { return std::pair{mono(q_to(n, 1), O, 1), one(O, 1)}; });
    const auto sl = cf_separate_limits(K, O);
    const S P1 = prod_inv({1, 4}, 5, O, 1), P2 = prod_inv({2, 3}, 5, O, 1);
    std::vector<CheckPair> out;
    out.push_back(pair("numerator convergents", sl.A, P1));
    out.push_back(pair("denominator convergents", sl.B, P2));
    out.push_back(pair("value", cf_value(K, O).value, P1 * prod({2, 3}, 5, O, 1)));

    // H1(-q^(1/2), q^(1/2), 0, 1) is 1/K(q^2); work in t = q^(1/2)
    const int T = 2 * O;
    const HParams<Rat> p{M(Rat(-1), 1), M(Rat(1), 1), M(Rat(0)), M(Rat(1)), 2};
    const S Q1 = lift(prod_inv({1, 4}, 5, T / 4, 1), 4, 2);
    const S Q2 = lift(prod_inv({2, 3}, 5, T / 4, 1), 4, 2);
    const auto sl1 = cf_separate_limits(cf_H1(p, T), T);
    const auto cl = limit_CN_DN(p, T);
    out.push_back(pair("H1 numerators at -a=b=q^(1/2)", sl1.A, Q2));
    out.push_back(pair("H1 denominators at -a=b=q^(1/2)", sl1.B, Q1));
    out.push_back(pair("closed-form C limit", cl.first, Q2));
    out.push_back(pair("closed-form D limit", cl.second, Q1));
    out.push_back(pair("very-well-poised C limit", wat1_sides(p, T).second, Q2));
    return out;
  };
  return c;
}

IdentityCase q2q3() {
  IdentityCase c;
  c.id = "Q2Q3";
  c.description = "1/1 - q/(q+1) - q^3/(q^2+1) - ... = (q^2;q^3)/(q;q^3), with separate limits; also over Q(w)";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    const CF f = fraction(S(O, 1), [O](int n) {
      if (n == 1) return std::pair{one(O, 1), one(O, 1)};
      return std::pair{mono(M(Rat(-1), 2 * n - 3), O, 1), one(O, 1) + mono(q_to(n - 1, 1), O, 1)};
    });
    const S R1 = prod_inv({1}, 3, O, 1), R2 = prod_inv({2}, 3, O, 1);
    std::vector<CheckPair> out;
    out.push_back(pair("value", cf_value(f, O).value, prod({2}, 3, O, 1) * R1));
    const auto sl = cf_separate_limits(f, O);
    out.push_back(pair("numerator convergents", sl.A, R1));
    out.push_back(pair("denominator convergents", sl.B, R2));

    const EisRat w = EisRat::omega();
    const HParams<EisRat> pe{ME(-w), ME(-(w * w)), ME(EisRat(0)), ME(EisRat(1)), 1};
    const SE E1 = R1.cast<EisRat>(), E2 = R2.cast<EisRat>();
    const auto cl = limit_CN_DN(pe, O);
    const auto sle = cf_separate_limits(cf_H1(pe, O), O);
    out.push_back(pair("H1(-w,-w^2,0,1) numerators", sle.A, E1));
    out.push_back(pair("H1(-w,-w^2,0,1) denominators", sle.B, E2));
    out.push_back(pair("closed-form C limit at -w,-w^2", cl.first, E1));
    out.push_back(pair("closed-form D limit at -w,-w^2", cl.second, E2));
    out.push_back(pair("very-well-poised C limit at -w,-w^2", wat1_sides(pe, O).second, E1));
    return out;
  };
  return c;
}

IdentityCase z3() {
  IdentityCase c;
  c.id = "Z3";
  c.description = "S(q) = 1/1 + (q+q^2)/1 + (q^2+q^4)/1 + ... = (q;q^2)/(q^3;q^6)^3, with the half-integral proof path";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    const CF f = fraction(S(O, 1), [O](int n) {
      if (n == 1) return std::pair{one(O, 1), one(O, 1)};
      return std::pair{mono(q_to(n - 1, 1), O, 1) + mono(q_to(2 * n - 2, 1), O, 1), one(O, 1)};
    });
    const S inv = prod_inv({3}, 6, O, 1);
    const S value = prod({1}, 2, O, 1) * inv * inv * inv;
    std::vector<CheckPair> out;
    out.push_back(pair("value", cf_value(f, O).value, value));

    // a = -q^(-1/2), b = q^(-1/2), c = d = 1 in t = q^(1/2)
    const int T = 2 * O;
    const HParams<Rat> p{M(Rat(-1), -1), M(Rat(1), -1), M(Rat(1)), M(Rat(1)), 2};
    const auto sl = cf_separate_limits(cf_H1(p, T), T);
    const auto cl = limit_CN_DN(p, T);
    out.push_back(pair("numerator limit vs closed form", sl.A, cl.first));
    out.push_back(pair("denominator limit vs closed form", sl.B, cl.second));

    const S base = prod({1}, 2, O, 1) * prod({3}, 3, O, 1) * prod_inv({1}, 1, O, 1);
    const S Pc = base * pochhammer_infinite(M(Rat(-1), 1), O, 1, 3) * pochhammer_infinite(M(Rat(-1), 2), O, 1, 3);
    const S m3 = pochhammer_infinite(M(Rat(-1), 3), O, 1, 3);
    const S Pd = (base * m3 * m3).scaled(Rat(2));
    out.push_back(pair("C limit vs triple product", cl.first, lift(Pc, 2, 2)));
    out.push_back(pair("D minus C limit vs triple product", cl.second - cl.first, lift(Pd, 2, 2)));
    const S lifted = lift(value, 2, 2);
    out.push_back(pair("H1 value vs 1/(1+2S)", cf_value(cf_H1(p, T), T).value,
                       (one(T, 2) + lifted.scaled(Rat(2))).inverse()));
    const auto jtp = jacobi_triple_product_sides(M(Rat(1), 1), T, 2, 3);
    out.push_back(pair("triple product z=q^(1/2), base q^(3/2)", jtp.first, jtp.second));
    return out;
  };
  return c;
}

S absym_side(const M& a, const M& b, const M& c, int O) {
  const M q = q_to(1, 1);
  return pochhammer_infinite(-(a * q), O, 1) * qsum(b * q, -1, {{-(c / b)}}, {{-(a * q)}}, O, 1);
}

IdentityCase absym1() {
  IdentityCase c;
  c.id = "ABSYM1";
  c.description = "(-aq) sum (bq)^j (-c/b)_j q^(j(j-1)/2)/((q)_j (-aq)_j) is symmetric in a and b";
  c.params = {{"a"}, {"b"}, {"c"}};
  // term j is q^(j(j+1)/2) prod_{i<j}(b + c q^i) (-aq^(j+1))_inf / (q)_j:
  // degree j in b and c, and a^m needs q^(m(m+1)/2)
  c.degree_bounds = [](int O) {
    const int d = tri_bound(O);
    const std::string why = "a power k of any parameter costs at least q^(k(k+1)/2)";
    return std::vector<DegreeBound>{{"a", d, why}, {"b", d, why}, {"c", d, why}};
  };
  c.build = [](const Assignment& v, int O) {
    return std::vector<CheckPair>{pair("a-side vs b-side", absym_side(v[0], v[1], v[2], O), absym_side(v[1], v[0], v[2], O))};
  };
  return c;
}

IdentityCase rameq() {
  IdentityCase c;
  c.id = "RAMEQ";
  c.description = "sum (-b/a)_j a^j q^(j(j+1)/2)/((q)_j (bq)_j) = (-aq)_inf/(bq)_inf";
  c.params = {{"a"}, {"b", {1}}};
  // (-b/a)_j a^j = prod_{i<j}(a + b q^i) beside q^(j(j+1)/2); with b = beta q
  // every power of beta carries at least q^2 on both sides
  c.degree_bounds = [](int O) {
    return std::vector<DegreeBound>{{"a", tri_bound(O), "a^k needs q^(k(k+1)/2)"},
                                    {"b", O / 2, "b = beta q and beta^k needs q^(2k)"}};
  };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1];
    const M q = q_to(1, 1);
    const S lhs = qsum(a, 1, {{-(b / a)}}, {{b * q}}, O, 1);
    const S rhs = pochhammer_infinite(-(a * q), O, 1) * pochhammer_infinite_inverse(b * q, O, 1);
    return std::vector<CheckPair>{pair("sum vs product", lhs, rhs)};
  };
  return c;
}

IdentityCase amusing() {
  IdentityCase c;
  c.id = "AMUSING";
  c.description = "1/1 + (abq+bd)/((a-b)q+d) + ... = 1/(1+b), numerators and denominators scaled by d^(N-1)";
  c.params = {{"a"}, {"b"}, {"d"}};
  c.degree_bounds = [](int) {
    return sampled({"a", "b", "d"}, "ratio coefficients are rational in b and d");
  };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1], &d = v[2];
    const HParams<Rat> p{a, -b, b * d, d, 1};
    const S inv = S::constant((Rat(1) + b.coeff).inverse(), O, 1);
    const S prodq = pochhammer_infinite(-(a * q_to(1, 1) / d), O, 1);
    const auto sc = h1_scaled_limits(p, O);
    return std::vector<CheckPair>{pair("value vs 1/(1+b)", cf_value(cf_H1(p, O), O).value, inv),
                                  pair("C_N/d^(N-1) vs (-aq/d)_inf", sc.first, prodq),
                                  pair("D_N/d^(N-1) vs (1+b)(-aq/d)_inf", sc.second, prodq.scaled(Rat(1) + b.coeff))};
  };
  return c;
}

// 1 + x1 q/1 + y1 q/1 + x2/1 + y2/1 + ..., odd terms first
CF alternating(std::function<S(int)> odd, std::function<S(int)> even, int O) {
  return fraction(one(O, 1), [odd, even, O](int n) {
    const int k = (n + 1) / 2;
    return std::pair{n % 2 == 1 ? odd(k) : even(k), one(O, 1)};
  });
}

IdentityCase entry17() {
  IdentityCase c;
  c.id = "ENTRY17";
  c.description = "phi(a)/phi(aq) = 1 + aq/1 + bq/1 + aq^2/1 + bq^2/1 + ...";
  c.params = {{"a"}, {"b"}};
  c.degree_bounds = [](int) { return sampled({"a", "b"}, "ratio of two sums"); };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1];
    const M q = q_to(1, 1);
    const CF f = alternating([a, O](int k) { return mono(a * q_to(k, 1), O, 1); },
                             [b, O](int k) { return mono(b * q_to(k, 1), O, 1); }, O);
    auto phi = [&](const M& x) { return qsum(x, 1, {}, {{-(b * q)}}, O, 1); };
    return std::vector<CheckPair>{pair("fraction vs phi(a)/phi(aq)", cf_value(f, O).value, phi(a) / phi(a * q))};
  };
  return c;
}

IdentityCase fg_lost() {
  IdentityCase c;
  c.id = "FG_LOST";
  c.description = "1 + (aq+lq)/1 + (bq+lq^2)/1 + (aq^2+lq^3)/1 + ... = G(a,b,l)/G(aq,b,lq)";
  c.params = {{"a"}, {"b"}, {"lambda", {0, 1, 2}}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "lambda"}, "ratio of two sums"); };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1], &l = v[2];
    const M q = q_to(1, 1);
    const CF f = alternating(
        [a, l, O](int k) { return mono(a * q_to(k, 1), O, 1) + mono(l * q_to(2 * k - 1, 1), O, 1); },
        [b, l, O](int k) { return mono(b * q_to(k, 1), O, 1) + mono(l * q_to(2 * k, 1), O, 1); }, O);
    auto G = [&](const M& x, const M& lam) { return qsum(x, 1, {{-(lam / x)}}, {{-(b * q)}}, O, 1); };
    return std::vector<CheckPair>{pair("fraction vs G(a,b,l)/G(aq,b,lq)", cf_value(f, O).value, G(a, l) / G(a * q, l * q))};
  };
  return c;
}

IdentityCase h2_gen() {
  IdentityCase c;
  c.id = "H2_GEN";
  c.description = "1 + aq/1 + (bq+e)/1 + aq^2/1 + (bq^2+e)/1 + ... = phi(a)/phi(aq), through the odd part";
  c.params = {{"a"}, {"b"}, {"e"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "e"}, "ratio of two sums, rational in e"); };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1], &e = v[2];
    const M q = q_to(1, 1);
    const CF f = alternating([a, O](int k) { return mono(a * q_to(k, 1), O, 1); },
                             [b, e, O](int k) { return mono(b * q_to(k, 1), O, 1) + mono(e, O, 1); }, O);
    const M e1(e.coeff + Rat(1));
    auto phi = [&](const M& x) { return qsum(x / e1, 1, {{e * a * q / (x * e1)}}, {{-(b * q / e1)}}, O, 1); };
    return std::vector<CheckPair>{pair("odd part vs phi(a)/phi(aq)", cf_value(odd_part(f), O).value, phi(a) / phi(a * q))};
  };
  return c;
}

IdentityCase h3_gen() {
  IdentityCase c;
  c.id = "H3_GEN";
  c.description = "1 + (aq+e)/1 + bq/1 + (aq^2+e)/1 + bq^2/1 + ... = (e+1)phi(a)/phi(aq), through the odd part";
  c.params = {{"a"}, {"b"}, {"e"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "e"}, "ratio of two sums, rational in e"); };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1], &e = v[2];
    const M q = q_to(1, 1);
    const CF f = alternating([a, e, O](int k) { return mono(a * q_to(k, 1), O, 1) + mono(e, O, 1); },
                             [b, O](int k) { return mono(b * q_to(k, 1), O, 1); }, O);
    const M e1(e.coeff + Rat(1));
    auto phi = [&](const M& x) { return qsum(x / e1, 1, {{e * b / (a * e1)}}, {{-(b * q / e1)}}, O, 1); };
    const S rhs = (phi(a) / phi(a * q)).scaled(e1.coeff);
    return std::vector<CheckPair>{pair("odd part vs (e+1)phi(a)/phi(aq)", cf_value(odd_part(f), O).value, rhs)};
  };
  return c;
}

IdentityCase e644() {
  IdentityCase c;
  c.id = "E644";
  c.description = "G(aq,lq;b)/G(a,l;b) = 1/(1+aq) + (lq-abq^2)/(1+q(aq+b)) + ...";
  c.params = {{"a"}, {"b"}, {"lambda", {0, 1, 2}}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "lambda"}, "ratio of two sums"); };
  c.build = [](const Assignment& v, int O) {
    const M &a = v[0], &b = v[1], &l = v[2];
    const M q = q_to(1, 1);
    const CF f = fraction(S(O, 1), [a, b, l, q, O](int n) {
      if (n == 1) return std::pair{one(O, 1), one(O, 1) + mono(a * q, O, 1)};
      const int k = n - 1;
      return std::pair{mono(l * q_to(k, 1), O, 1) - mono(a * b * q_to(2 * k, 1), O, 1),
                       one(O, 1) + mono(a * q_to(k + 1, 1), O, 1) + mono(b * q_to(k, 1), O, 1)};
    });
    auto G = [&](const M& x, const M& lam) { return qsum(x, 1, {{-(lam / x)}}, {{-(b * q)}}, O, 1); };
    return std::vector<CheckPair>{pair("fraction vs G(aq,lq;b)/G(a,l;b)", cf_value(f, O).value, G(a * q, l * q) / G(a, l))};
  };
  return c;
}

IdentityCase slater_a44() {
  IdentityCase c;
  c.id = "SLATER_A44";
  c.description = "sum q^(3r(r+1)/2)/((q;q^2)_(r+1)(q)_r) = (q^8,q^2,q^10;q^10)/(q)_inf";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    TermSpec<Rat> t;
    t.quad2 = 3;
    t.lin2 = 3;
    t.den = {{q_to(1, 1), 2, 1, 1}, {q_to(1, 1)}};
    const S rhs = prod({8, 2, 10}, 10, O, 1) * prod_inv({1}, 1, O, 1);
    return std::vector<CheckPair>{pair("sum vs product", hyper_sum(t, O, 1), rhs)};
  };
  return c;
}

IdentityCase slater_a62() {
  IdentityCase c;
  c.id = "SLATER_A62";
  c.description = "sum (-q)_r q^(r(3r+1)/2)/(q)_(2r+1) = (q^6,q^4,q^10;q^10)/(q)_inf";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    TermSpec<Rat> t;
    t.quad2 = 3;
    t.lin2 = 1;
    t.num = {{M(Rat(-1), 1)}};
    t.den = {{q_to(1, 1), 1, 2, 1}};
    const S rhs = prod({6, 4, 10}, 10, O, 1) * prod_inv({1}, 1, O, 1);
    return std::vector<CheckPair>{pair("sum vs product", hyper_sum(t, O, 1), rhs)};
  };
  return c;
}

IdentityCase watson_finite() {
  IdentityCase c;
  c.id = "WATSON_FINITE";
  c.description = "terminating very-well-poised 8phi7 equals the prefactor times a balanced 4phi3, n = 0..6";
  c.params = {{"A"}, {"B"}, {"C"}, {"D"}, {"E"}};
  c.degree_bounds = [](int) { return sampled({"A", "B", "C", "D", "E"}, "both sides are rational in every parameter"); };
  c.build = [](const Assignment& v, int O) {
    std::vector<CheckPair> out;
    for (int n = 0; n <= 6; ++n) {
      const auto s = watson_finite_sides(WatsonParams<Rat>{v[0], v[1], v[2], v[3], v[4], n}, O, 1);
      out.push_back(pair("n = " + std::to_string(n), s.first, s.second));
    }
    return out;
  };
  return c;
}

IdentityCase watson_limit() {
  IdentityCase c;
  c.id = "WATSON_LIMIT";
  c.description = "the B, D, n -> infinity form of the 8phi7 transformation";
  c.params = {{"A"}, {"C"}, {"E"}};
  c.degree_bounds = [](int) { return sampled({"A", "C", "E"}, "both sides are rational in every parameter"); };
  c.build = [](const Assignment& v, int O) {
    const auto s = watson_limit_sides(v[0], v[1], v[2], O, 1);
    return std::vector<CheckPair>{pair("well-poised sum vs product times single sum", s.first, s.second)};
  };
  return c;
}

HParams<Rat> hp(const Assignment& v) { return {v[0], v[1], v[2], v[3], 1}; }

IdentityCase wat1() {
  IdentityCase c;
  c.id = "WAT1";
  c.description = "lim C_N/d^(N-1) equals a single sum and a very-well-poised sum at A=c/d^2, C=-c/ad, E=-c/bd";
  c.params = {{"a"}, {"b"}, {"c"}, {"d"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "c", "d"}, "sums are rational in every parameter"); };
  c.build = [](const Assignment& v, int O) {
    const auto w = wat1_sides(hp(v), O);
    const auto sc = h1_scaled_limits(hp(v), O);
    return std::vector<CheckPair>{pair("single sum vs very-well-poised sum", w.first, w.second),
                                  pair("scaled numerator limit vs single sum", sc.first, w.first)};
  };
  return c;
}

IdentityCase wat2() {
  IdentityCase c;
  c.id = "WAT2";
  c.description = "lim (D_N-C_N)/d^(N-1) equals a single sum and a very-well-poised sum at A=cq/d^2";
  c.params = {{"a"}, {"b"}, {"c"}, {"d"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "c", "d"}, "sums are rational in every parameter"); };
  c.build = [](const Assignment& v, int O) {
    const auto w = wat2_sides(hp(v), O);
    const auto sc = h1_scaled_limits(hp(v), O);
    return std::vector<CheckPair>{pair("single sum vs very-well-poised sum", w.first, w.second),
                                  pair("scaled D minus C limit vs single sum", sc.second - sc.first, w.first)};
  };
  return c;
}

IdentityCase h_lim() {
  IdentityCase c;
  c.id = "H_LIM";
  c.description = "1/H(a,b,c,d,q) - 1 equals the quotient of two sums; a has positive valuation";
  c.params = {{"a", {1, 2}}, {"b"}, {"c"}, {"d"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "c", "d"}, "quotient of two sums"); };
  c.build = [](const Assignment& v, int O) {
    const auto s = limit_H_sides(hp(v), O);
    return std::vector<CheckPair>{pair("1/H - 1 vs quotient", s.first, s.second)};
  };
  return c;
}

IdentityCase h1_lim() {
  IdentityCase c;
  c.id = "H1_LIM";
  c.description = "1/H1(a,b,c,d,q) - 1 equals the quotient of two sums";
  c.params = {{"a"}, {"b"}, {"c"}, {"d"}};
  c.degree_bounds = [](int) { return sampled({"a", "b", "c", "d"}, "quotient of two sums"); };
  c.build = [](const Assignment& v, int O) {
    const auto s = limit_H1_sides(hp(v), O);
    return std::vector<CheckPair>{pair("1/H1 - 1 vs quotient", s.first, s.second)};
  };
  return c;
}

IdentityCase an_bn_lim() {
  IdentityCase c;
  c.id = "AN_BN_LIM";
  c.description = "with b = 1, A_N and B_N of H converge separately to the two closed-form sums";
  c.params = {{"a", {1, 2}}, {"c"}, {"d"}};
  c.degree_bounds = [](int) { return sampled({"a", "c", "d"}, "the sums carry 1/(a)_(n+1)"); };
  c.build = [](const Assignment& v, int O) {
    const HParams<Rat> p{v[0], M(Rat(1)), v[1], v[2], 1};
    const auto sl = cf_separate_limits(cf_H(p, O), O);
    const auto cl = limit_AN_BN(p, O);
    return std::vector<CheckPair>{pair("numerator limit", sl.A, cl.first), pair("denominator limit", sl.B, cl.second)};
  };
  return c;
}

IdentityCase cn_dn_lim() {
  IdentityCase c;
  c.id = "CN_DN_LIM";
  c.description = "with d = 1, C_N and D_N of H1 converge separately to the two closed-form sums";
  c.params = {{"a"}, {"b"}, {"c"}};
  // the closed forms of C_N and D_N are sums of a^j b^i c^l with total
  // power m costing q^(m(m+1)/2 - 1) or more
  c.degree_bounds = [](int O) {
    const int d = tri_bound(O + 1);
    const std::string why = "power k of a parameter in C_N or D_N costs q^(k(k+1)/2 - 1)";
    return std::vector<DegreeBound>{{"a", d, why}, {"b", d, why}, {"c", d, why}};
  };
  c.build = [](const Assignment& v, int O) {
    const HParams<Rat> p{v[0], v[1], v[2], M(Rat(1)), 1};
    const auto sl = cf_separate_limits(cf_H1(p, O), O);
    const auto cl = limit_CN_DN(p, O);
    return std::vector<CheckPair>{pair("numerator limit", sl.A, cl.first), pair("denominator limit", sl.B, cl.second)};
  };
  return c;
}

IdentityCase qbin_finite() {
  IdentityCase c;
  c.id = "QBIN_FINITE";
  c.description = "(z;q)_N = sum_j [N j] (-z)^j q^(j(j-1)/2), N = 0..8";
  c.params = {{"z"}};
  c.degree_bounds = [](int) {
    return std::vector<DegreeBound>{{"z", 8, "both sides have degree N <= 8 in z"}};
  };
  c.build = [](const Assignment& v, int O) {
    std::vector<CheckPair> out;
    for (int N = 0; N <= 8; ++N) {
      const auto s = qbinomial_theorem_sides(v[0], N, QBinomialForm::Finite, O, 1);
      out.push_back(pair("N = " + std::to_string(N), s.first, s.second));
    }
    return out;
  };
  return c;
}

IdentityCase qbin_recip() {
  IdentityCase c;
  c.id = "QBIN_RECIP";
  c.description = "1/(z;q)_N = sum_j [N+j-1 j] z^j, N = 1..4";
  c.params = {{"z", {1}}};
  c.degree_bounds = [](int O) {
    return std::vector<DegreeBound>{{"z", O, "z = zeta q and zeta^k needs q^k"}};
  };
  c.build = [](const Assignment& v, int O) {
    std::vector<CheckPair> out;
    for (int N = 1; N <= 4; ++N) {
      const auto s = qbinomial_theorem_sides(v[0], N, QBinomialForm::Reciprocal, O, 1);
      out.push_back(pair("N = " + std::to_string(N), s.first, s.second));
    }
    return out;
  };
  return c;
}

IdentityCase jtp() {
  IdentityCase c;
  c.id = "JTP";
  c.description = "(-qz;q^2)(-q/z;q^2)(q^2;q^2) = sum z^n q^(n^2)";
  c.params = {{"z"}};
  // z^n appears with q^(n^2) at least, so z^k times each coefficient is a
  // polynomial of degree 2k, k = floor(sqrt(order))
  c.degree_bounds = [](int O) {
    const int k = static_cast<int>(std::sqrt(static_cast<double>(O)) + 1e-9);
    return std::vector<DegreeBound>{{"z", 2 * k, "Laurent in z with |power| <= sqrt(order)"}};
  };
  c.build = [](const Assignment& v, int O) {
    const auto s = jacobi_triple_product_sides(v[0], O, 1);
    const auto h = jacobi_triple_product_sides(M(Rat(1), 1), 2 * O, 2, 3);
    return std::vector<CheckPair>{pair("product vs theta sum", s.first, s.second),
                                  pair("z=q^(1/2), base q^(3/2)", h.first, h.second)};
  };
  return c;
}

IdentityCase gb_qinv() {
  IdentityCase c;
  c.id = "GB_QINV";
  c.description = "[n m] at 1/q equals q^(m(m-n)) [n m], 0 <= m <= n <= 12";
  c.degree_bounds = no_bounds();
  c.build = [](const Assignment&, int O) {
    std::vector<CheckPair> out;
    for (int n = 0; n <= 12; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto s = gaussian_binomial_qinv_sides<Rat>(n, m, O, 1);
        out.push_back(pair("[" + std::to_string(n) + " " + std::to_string(m) + "]", s.first, s.second));
      }
    return out;
  };
  return c;
}

std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> rows = {
      rr_sum_product(), rr_cf(),       q2q3(),        z3(),         absym1(),       rameq(),      amusing(),
      entry17(),        fg_lost(),     h2_gen(),      h3_gen(),     e644(),         slater_a44(), slater_a62(),
      watson_finite(),  watson_limit(), wat1(),       wat2(),       h_lim(),        h1_lim(),     an_bn_lim(),
      cn_dn_lim(),      qbin_finite(), qbin_recip(),  jtp(),        gb_qinv()};
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return rows;
}

}  // namespace

std::string IdentityCase::signature() const {
  if (params.empty()) return "-";
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ", ";
    out += p.name;
    if (p.exps.size() == 1 && p.exps[0] == 0) continue;
    out += "*q^{";
    for (std::size_t i = 0; i < p.exps.size(); ++i) out += (i ? "," : "") + std::to_string(p.exps[i]);
    out += "}";
  }
  return out;
}

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> rows = build_registry();
  return rows;
}

const IdentityCase& find_identity(const std::string& id) {
  for (const auto& r : registry())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownIdentity, id);
}

}  // namespace qcf
