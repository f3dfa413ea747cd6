#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"
#include "qcf/objects.hpp"
#include "qcf/serialize.hpp"
#include "qcf/verifier.hpp"
#include "support.hpp"

using namespace qcf;
using nlohmann::json;
using qt::M;
using qt::r;
using qt::S;

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

const SeriesPair<Rat>& rat_sides(const CheckPair& p) { return std::get<SeriesPair<Rat>>(p.sides); }

// (D+1)-th forward difference of f over the points 2, 3, ..., D+3
Rat top_difference(const std::vector<Rat>& values) {
  std::vector<Rat> d = values;
  while (d.size() > 1) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return d[0];
}

// Every coefficient of both sides, as a function of parameter `which`
// with the others fixed, has degree <= the advertised bound.
void check_degree_bound(const std::string& id, int order, std::size_t which, int mult_power = 0) {
  const IdentityCase& row = find_identity(id);
  const auto bounds = row.degree_bounds(order);
  REQUIRE(bounds[which].bound);
  const int D = *bounds[which].bound;
  Assignment base;
  for (std::size_t i = 0; i < row.params.size(); ++i)
    base.emplace_back(Rat(5, static_cast<long>(i) + 3), row.params[i].exps.front());
  std::vector<std::vector<CheckPair>> built;
  std::vector<Rat> xs;
  for (int k = 0; k <= D + 1; ++k) {
    Assignment a = base;
    a[which].coeff = Rat(k + 2);
    xs.push_back(a[which].coeff);
    built.push_back(row.build(a, order));
  }
  for (std::size_t p = 0; p < built[0].size(); ++p)
    for (int side = 0; side < 2; ++side) {
      const int n = rat_sides(built[0][p]).first.order();
      for (int c = 0; c <= n; ++c) {
        std::vector<Rat> v;
        for (std::size_t k = 0; k < built.size(); ++k) {
          const auto& pr = rat_sides(built[k][p]);
          Rat x = (side == 0 ? pr.first : pr.second)[c];
          for (int e = 0; e < mult_power; ++e) x *= xs[k];
          v.push_back(x);
        }
        if (!top_difference(v).is_zero()) {
          FAIL_CHECK(id << " coefficient " << c << " exceeds degree " << D << " in " << row.params[which].name);
          return;
        }
      }
    }
}

std::set<std::map<std::string, std::string>> as_set(const VerificationReport& r) {
  return {r.assignments.begin(), r.assignments.end()};
}

}  // namespace

TEST_CASE("registry listing") {
  const auto rows = list_identities();
  CHECK(rows.size() >= 26);
  std::vector<std::string> ids;
  for (const auto& r : rows) ids.push_back(r.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::find(ids.begin(), ids.end(), "RR_SUM_PRODUCT") != ids.end());
  const auto again = list_identities();
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].id == rows[i].id);
  for (const char* id : {"RR_SUM_PRODUCT", "RR_CF",      "Q2Q3",          "Z3",           "ABSYM1",     "RAMEQ",
                         "AMUSING",        "ENTRY17",    "FG_LOST",       "H2_GEN",       "H3_GEN",     "E644",
                         "SLATER_A44",     "SLATER_A62", "WATSON_FINITE", "WATSON_LIMIT", "WAT1",       "WAT2",
                         "H_LIM",          "H1_LIM",     "AN_BN_LIM",     "CN_DN_LIM",    "QBIN_FINITE", "QBIN_RECIP",
                         "JTP",            "GB_QINV"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK(find_identity("FG_LOST").signature() == "a, b, lambda*q^{0,1,2}");
  CHECK(find_identity("GB_QINV").signature() == "-");
  CHECK(kind_of([] { (void)find_identity("NOPE"); }) == ErrorKind::UnknownIdentity);
}

TEST_CASE("Rogers-Ramanujan sums against partition counts") {
  const auto p14 = qt::count_partitions(100, [](int k) { return k % 5 == 1 || k % 5 == 4; });
  const auto p23 = qt::count_partitions(100, [](int k) { return k % 5 == 2 || k % 5 == 3; });
  const auto pairs = find_identity("RR_SUM_PRODUCT").build({}, 100);
  CHECK(rat_sides(pairs[0]).first == qt::from_ints(p14));
  CHECK(rat_sides(pairs[1]).first == qt::from_ints(p23));
  CHECK(rat_sides(pairs[0]).first.truncated(6) == qt::from_ints({1, 1, 1, 1, 2, 2, 3}));
  const auto rep = verify("RR_SUM_PRODUCT", 100, 1, 0);
  CHECK(rep.pass);
  CHECK(rep.certificate == kDegreeBoundComplete);
}

TEST_CASE("fixed rows") {
  const auto q23 = find_identity("Q2Q3").build({}, 5);
  CHECK(rat_sides(q23[0]).second == qt::from_ints({1, 1, 0, 0, 1, 0}));
  const auto a44 = find_identity("SLATER_A44").build({}, 30);
  const auto p = qt::count_partitions(30, [](int) { return true; });
  // the product side is (q^2,q^8,q^10;q^10)/(q)_inf: partitions times three factors
  S prod = qt::from_ints(p);
  for (int e : {2, 8, 10, 12, 18, 20, 22, 28, 30}) prod.mul_binomial(M(r(1), e));
  CHECK(rat_sides(a44[0]).second == prod);
  CHECK(verify("AMUSING", 30, 5, 0).pass);
  CHECK(verify("Q2Q3", 5, 1, 0).pass);
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"ENTRY17", "QBIN_FINITE", "H1_LIM"}) {
    const auto x = verify(id, 20, 3, 7), y = verify(id, 20, 3, 7);
    json jx = json::parse(report_to_json(x)), jy = json::parse(report_to_json(y));
    jx.erase("elapsed_ms");
    jy.erase("elapsed_ms");
    CHECK(jx == jy);
    CHECK(x.pass);
  }
  const auto s0 = verify("ENTRY17", 20, 3, 0), s1 = verify("ENTRY17", 20, 3, 1);
  CHECK(s0.assignments != s1.assignments);
}

TEST_CASE("mutation is caught at the perturbed coefficient") {
  for (const auto& info : list_identities()) {
    VerifyOptions o;
    o.order = 20;
    o.draws = 1;
    o.mutate_k = 17;
    const auto rep = verify(info.id, o);
    CHECK_MESSAGE(!rep.pass, info.id);
    REQUIRE_MESSAGE(rep.first_mismatch, info.id);
    CHECK_MESSAGE(rep.first_mismatch->coefficient == "17", info.id);
    CHECK(rep.first_mismatch->t_index == 17 * rep.first_mismatch->scale);
    CHECK(rep.first_mismatch->assignment < rep.assignments.size());
  }
  VerifyOptions o;
  o.order = 10;
  o.mutate_k = 3;
  const auto rep = verify("ABSYM1", o);
  REQUIRE(rep.first_mismatch);
  CHECK(Rat::parse(rep.first_mismatch->rhs) - Rat::parse(rep.first_mismatch->lhs) == r(1));
}

TEST_CASE("degree-bound certificates") {
  for (const auto& info : list_identities()) {
    const auto bounds = degree_bound_table(info.id, 20);
    const bool complete = std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.bound.has_value(); });
    const auto rep = verify(info.id, 12, 2, 0);
    CHECK_MESSAGE(rep.pass, info.id);
    CHECK(rep.certificate == (complete ? kDegreeBoundComplete : kSampled));
    for (const auto& b : bounds) CHECK_FALSE(b.reason.empty());
  }
  CHECK(*degree_bound_table("QBIN_FINITE", 50)[0].bound == 8);
  CHECK_FALSE(degree_bound_table("AMUSING", 30)[0].bound.has_value());
  CHECK(kind_of([] { (void)degree_bound_table("NOPE", 5); }) == ErrorKind::UnknownIdentity);
}

TEST_CASE("degree bounds hold by finite differences") {
  check_degree_bound("ABSYM1", 12, 0);
  check_degree_bound("ABSYM1", 12, 1);
  check_degree_bound("ABSYM1", 12, 2);
  check_degree_bound("RAMEQ", 12, 0);
  check_degree_bound("RAMEQ", 12, 1);
  check_degree_bound("CN_DN_LIM", 10, 0);
  check_degree_bound("CN_DN_LIM", 10, 1);
  check_degree_bound("CN_DN_LIM", 10, 2);
  check_degree_bound("QBIN_FINITE", 30, 0);
  check_degree_bound("QBIN_RECIP", 15, 0);
  // z^k times a Laurent polynomial with |power| <= k
  check_degree_bound("JTP", 16, 0, 4);

  // each coefficient of A_5 has degree <= 4 in every parameter
  for (int which = 0; which < 4; ++which) {
    std::vector<S> vals;
    for (int k = 0; k <= 5; ++k) {
      std::vector<M> p = {M(r(2)), M(r(-3)), M(r(5, 2)), M(r(7))};
      p[which] = M(r(k + 2));
      vals.push_back(explicit_A_N(HParams<Rat>{p[0], p[1], p[2], p[3], 1}, 5, 12));
    }
    for (int c = 0; c <= 12; ++c) {
      std::vector<Rat> v;
      for (const auto& s : vals) v.push_back(s[c]);
      CHECK(top_difference(v).is_zero());
    }
  }
}

TEST_CASE("disjoint grids agree") {
  for (const auto& info : list_identities()) {
    const auto bounds = degree_bound_table(info.id, 10);
    if (bounds.empty()) continue;
    if (!std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.bound.has_value(); })) continue;
    const auto a = verify(info.id, 10, 1, 0), b = verify(info.id, 10, 1, 1);
    CHECK_MESSAGE(a.pass, info.id);
    CHECK_MESSAGE(b.pass, info.id);
    const auto sa = as_set(a), sb = as_set(b);
    for (const auto& x : sa) CHECK_MESSAGE(sb.count(x) == 0, info.id);
  }
}

TEST_CASE("grid values") {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < 2000; ++k) {
    const Rat v = grid_value(k);
    CHECK_FALSE(v.is_zero());
    CHECK_FALSE(v.abs() == r(1));
    seen.insert(v.str());
  }
  CHECK(seen.size() == 2000);
  const std::vector<Rat> head = {r(2), r(-2), r(1, 2), r(-1, 2), r(3), r(-3), r(3, 2), r(-3, 2), r(1, 3)};
  for (std::size_t k = 0; k < head.size(); ++k) CHECK(grid_value(k) == head[k]);
}

TEST_CASE("verify argument checks") {
  CHECK(kind_of([] { (void)verify("NOPE", 10, 1, 0); }) == ErrorKind::UnknownIdentity);
  CHECK(kind_of([] { (void)verify("JTP", 0, 1, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)verify("JTP", 10, 0, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("verify_all keeps registry order") {
  VerifyOptions o;
  o.order = 8;
  o.draws = 1;
  const auto reps = verify_all(o, 3);
  const auto rows = list_identities();
  REQUIRE(reps.size() == rows.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(reps[i].id == rows[i].id);
    CHECK_MESSAGE(reps[i].pass, reps[i].id);
  }
}

TEST_CASE("report JSON") {
  VerifyOptions o;
  o.order = 10;
  o.draws = 2;
  o.mutate_k = 4;
  const json bad = json::parse(report_to_json(verify("ENTRY17", o)));
  const json good = json::parse(report_to_json(verify("ENTRY17", 10, 2, 0)));
  for (const json* j : {&bad, &good}) {
    CHECK((*j)["id"] == "ENTRY17");
    CHECK((*j)["order"] == 10);
    CHECK((*j)["certificate"].is_string());
    CHECK((*j)["status"].is_string());
    CHECK((*j)["assignments"].is_array());
    CHECK((*j)["elapsed_ms"].is_number());
    for (const auto& a : (*j)["assignments"]) {
      CHECK(a.is_object());
      CHECK(a.contains("a"));
      CHECK(a.contains("b"));
    }
  }
  CHECK(good["status"] == "pass");
  CHECK_FALSE(good.contains("first_mismatch"));
  CHECK(bad["status"] == "fail");
  CHECK(bad["first_mismatch"]["coefficient"] == "4");
  CHECK(bad["first_mismatch"]["lhs"].is_string());
  CHECK(bad["first_mismatch"]["rhs"].is_string());
  CHECK(bad["first_mismatch"]["assignment"] == 0);
  const json all = json::parse(reports_to_json({verify("JTP", 5, 1, 0), verify("GB_QINV", 5, 1, 0)}));
  CHECK(all.size() == 2);
}

TEST_CASE("series JSON round trip") {
  qt::Sampler s(71);
  const S x = s.series(15, 2);
  const S y = series_from_json(series_to_json(x));
  CHECK(y == x);
  const json j = json::parse(series_to_json(x));
  CHECK(j["order"] == 15);
  CHECK(j["scale"] == 2);
  CHECK(j["coeffs"].size() == 16);
  const Series<EisRat> e({EisRat(r(1), r(2)), EisRat(r(-1, 3))}, 1);
  CHECK(json::parse(series_to_json(e))["coeffs"][0] == "1+2*w");
  CHECK(kind_of([] { (void)series_from_json("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)series_from_json(R"({"coeffs": ["1"], "order": 3, "scale": 1})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { (void)series_from_json(R"({"coeffs": ["x"], "scale": 1})"); }) == ErrorKind::Parse);
}
