#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcf/objects.hpp"
#include "qcf/serialize.hpp"
#include "qcf/verifier.hpp"

namespace {

using qcf::Rat;
using M = qcf::Monomial<Rat>;
using S = qcf::Series<Rat>;
using CF = qcf::ContinuedFraction<S>;

constexpr int kBadInput = 2;

// "3/7", "q", "-2q^3", "1/2*q^2"
M parse_param(const std::string& text) {
  const auto pos = text.find('q');
  if (pos == std::string::npos) return M(Rat::parse(text));
  std::string c = text.substr(0, pos);
  if (!c.empty() && c.back() == '*') c.pop_back();
  Rat coeff = c.empty() || c == "+" ? Rat(1) : (c == "-" ? Rat(-1) : Rat::parse(c));
  int e = 1;
  const std::string rest = text.substr(pos + 1);
  if (!rest.empty()) {
    if (rest[0] != '^') throw qcf::Error(qcf::ErrorKind::Parse, "bad parameter " + text);
    e = std::stoi(rest.substr(1));
  }
  return M(coeff, e);
}

std::string qpoly(const S& s, int upto) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= std::min(upto, s.order()); ++k) {
    if (s[k].is_zero()) continue;
    std::string c = s[k].str();
    const bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (k == 0 || c != "1") os << c << (k > 0 ? " " : "");
    if (k > 0) os << "q" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

struct FractionEntry {
  std::string names;  // labels for numerators / denominators
  std::function<CF(const std::map<std::string, M>&, int)> make;
};

S one(int O) { return S::one(O, 1); }
S mono(const M& m, int O) { return S::monomial(m, O, 1); }
M qk(int k) { return M(Rat(1), k); }

CF alternating(std::function<S(int)> odd, std::function<S(int)> even, int O) {
  return CF{one(O), [odd, even, O](int n) {
              const int k = (n + 1) / 2;
              return std::pair{n % 2 == 1 ? odd(k) : even(k), one(O)};
            }};
}

std::map<std::string, FractionEntry> fractions() {
  std::map<std::string, FractionEntry> f;
  auto hp = [](const std::map<std::string, M>& p) { return qcf::HParams<Rat>{p.at("a"), p.at("b"), p.at("c"), p.at("d"), 1}; };
  f["H"] = {"A B", [hp](const auto& p, int O) { return qcf::cf_H(hp(p), O); }};
  f["H1"] = {"C D", [hp](const auto& p, int O) { return qcf::cf_H1(hp(p), O); }};
  f["AMUSING"] = {"C D", [](const auto& p, int O) {
                    const M &a = p.at("a"), &b = p.at("b"), &d = p.at("d");
                    return qcf::cf_H1(qcf::HParams<Rat>{a, -b, b * d, d, 1}, O);
                  }};
  f["RR"] = {"A B", [](const auto&, int O) { return CF{one(O), [O](int n) { return std::pair{mono(qk(n), O), one(O)}; }}; }};
  f["Q2Q3"] = {"A B", [](const auto&, int O) {
                 return CF{S(O, 1), [O](int n) {
                             if (n == 1) return std::pair{one(O), one(O)};
                             return std::pair{mono(M(Rat(-1), 2 * n - 3), O), one(O) + mono(qk(n - 1), O)};
                           }};
               }};
  f["Z3"] = {"A B", [](const auto&, int O) {
               return CF{S(O, 1), [O](int n) {
                           if (n == 1) return std::pair{one(O), one(O)};
                           return std::pair{mono(qk(n - 1), O) + mono(qk(2 * n - 2), O), one(O)};
                         }};
             }};
  f["ENTRY17"] = {"A B", [](const auto& p, int O) {
                    const M a = p.at("a"), b = p.at("b");
                    return alternating([a, O](int k) { return mono(a * qk(k), O); },
                                       [b, O](int k) { return mono(b * qk(k), O); }, O);
                  }};
  f["FG"] = {"A B", [](const auto& p, int O) {
               const M a = p.at("a"), b = p.at("b"), l = p.at("lambda");
               return alternating([a, l, O](int k) { return mono(a * qk(k), O) + mono(l * qk(2 * k - 1), O); },
                                  [b, l, O](int k) { return mono(b * qk(k), O) + mono(l * qk(2 * k), O); }, O);
             }};
  f["H2"] = {"A B", [](const auto& p, int O) {
               const M a = p.at("a"), b = p.at("b"), e = p.at("e");
               return alternating([a, O](int k) { return mono(a * qk(k), O); },
                                  [b, e, O](int k) { return mono(b * qk(k), O) + mono(e, O); }, O);
             }};
  f["H3"] = {"A B", [](const auto& p, int O) {
               const M a = p.at("a"), b = p.at("b"), e = p.at("e");
               return alternating([a, e, O](int k) { return mono(a * qk(k), O) + mono(e, O); },
                                  [b, O](int k) { return mono(b * qk(k), O); }, O);
             }};
  f["E644"] = {"A B", [](const auto& p, int O) {
                 const M a = p.at("a"), b = p.at("b"), l = p.at("lambda");
                 return CF{S(O, 1), [a, b, l, O](int n) {
                             if (n == 1) return std::pair{one(O), one(O) + mono(a * qk(1), O)};
                             const int k = n - 1;
                             return std::pair{mono(l * qk(k), O) - mono(a * b * qk(2 * k), O),
                                              one(O) + mono(a * qk(k + 1), O) + mono(b * qk(k), O)};
                           }};
               }};
  return f;
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw qcf::Error(qcf::ErrorKind::InvalidArgument, "cannot write " + path);
  out << text << "\n";
}

void print_reports(const std::vector<qcf::VerificationReport>& reps) {
  std::cout << std::left << std::setw(16) << "id" << std::setw(7) << "status" << std::setw(23) << "certificate"
            << std::right << std::setw(8) << "points" << std::setw(8) << "pairs" << std::setw(11) << "ms" << "\n";
  for (const auto& r : reps) {
    std::cout << std::left << std::setw(16) << r.id << std::setw(7) << (r.pass ? "pass" : "FAIL") << std::setw(23)
              << r.certificate << std::right << std::setw(8) << r.assignments.size() << std::setw(8)
              << r.pairs_checked << std::setw(11) << std::fixed << std::setprecision(1) << r.elapsed_ms << "\n";
    if (r.first_mismatch) {
      const auto& m = *r.first_mismatch;
      std::cout << "  first mismatch at q^" << m.coefficient << " in '" << m.pair << "': " << m.lhs << " vs " << m.rhs
                << "\n";
      for (const auto& [k, v] : r.assignments[m.assignment]) std::cout << "    " << k << " = " << v << "\n";
    }
    if (r.error) std::cout << "  error: " << *r.error << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcf: exact verification of q-continued fractions and q-series identities"};
  app.require_subcommand(1);
  app.fallthrough();

  int order = 50, draws = 5;
  std::uint64_t seed = 0;
  bool as_json = false;
  std::string out_path;
  app.add_option("--order", order, "truncation order in q")->check(CLI::PositiveNumber);
  app.add_option("--draws", draws, "random assignments for sampled rows")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for grids and draws (QCF_SEED overrides)");
  app.add_flag("--json", as_json, "print JSON instead of a table");
  app.add_option("--out", out_path, "also write JSON to this file");

  auto* list = app.add_subcommand("list", "list the identity registry");

  std::string id;
  std::optional<int> mutate;
  auto* verify = app.add_subcommand("verify", "verify one registry row");
  verify->add_option("id", id, "identity id")->required();
  verify->add_option("--mutate", mutate, "add q^k to every right side");

  unsigned threads = 0;
  auto* verify_all = app.add_subcommand("verify-all", "verify every registry row");
  verify_all->add_option("--threads", threads, "worker threads (0: hardware)");
  verify_all->add_option("--mutate", mutate, "add q^k to every right side");

  std::string fraction;
  int N = 8;
  std::map<std::string, std::string> params{{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}, {"e", "0"}, {"lambda", "0"}};
  auto* conv = app.add_subcommand("convergents", "numerator/denominator tables of a fraction");
  conv->add_option("fraction", fraction, "H, H1, AMUSING, RR, Q2Q3, Z3, ENTRY17, FG, H2, H3, E644")->required();
  conv->add_option("--N", N, "largest index")->check(CLI::NonNegativeNumber);
  for (auto& [k, v] : params) conv->add_option("--" + k, v, "parameter " + k + " (e.g. 3/7 or -2q^3)");

  int m = 3, k = 40;
  std::optional<int> residue;
  std::string qtext = "0.3,0";
  double tol = 1e-9;
  auto* numeric = app.add_subcommand("numeric-check", "floating-point checks");
  auto* t11 = numeric->add_subcommand("theorem11", "finite fraction at roots of unity vs quotient of P-values");
  numeric->require_subcommand(1);
  t11->add_option("--m", m, "order of the root of unity")->check(CLI::Range(3, 1000));
  t11->add_option("--i", residue, "residue 1..m (default: all)");
  t11->add_option("--q", qtext, "q as re,im");
  t11->add_option("--k", k, "depth parameter")->check(CLI::PositiveNumber);
  t11->add_option("--tol", tol, "tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }
  if (const char* env = std::getenv("QCF_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "QCF_SEED must be a nonnegative integer\n";
      return kBadInput;
    }
  }

  try {
    if (*list) {
      const auto rows = qcf::list_identities();
      if (as_json || !out_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back({{"id", r.id}, {"description", r.description}, {"signature", r.signature}});
        if (as_json) std::cout << j.dump(2) << "\n";
        if (!out_path.empty()) write_out(out_path, j.dump(2));
        if (as_json) return 0;
      }
      for (const auto& r : rows) std::cout << std::left << std::setw(16) << r.id << std::setw(30) << r.signature << r.description << "\n";
      return 0;
    }

    if (*verify || *verify_all) {
      qcf::VerifyOptions o;
      o.order = order;
      o.draws = draws;
      o.seed = seed;
      o.mutate_k = mutate;
      std::vector<qcf::VerificationReport> reps;
      if (*verify) {
        try {
          qcf::find_identity(id);
        } catch (const qcf::Error& e) {
          std::cerr << e.what() << "\n";
          return kBadInput;
        }
        reps.push_back(qcf::verify(id, o));
      } else {
        reps = qcf::verify_all(o, threads);
      }
      const std::string text = *verify ? qcf::report_to_json(reps[0]) : qcf::reports_to_json(reps);
      if (as_json)
        std::cout << text << "\n";
      else
        print_reports(reps);
      if (!out_path.empty()) write_out(out_path, text);
      const bool ok = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.pass; });
      return ok ? 0 : 1;
    }

    if (*conv) {
      const auto table = fractions();
      const auto it = table.find(fraction);
      if (it == table.end()) {
        std::cerr << "unknown fraction " << fraction << "\n";
        return kBadInput;
      }
      std::map<std::string, M> p;
      try {
        for (const auto& [name, v] : params) p[name] = parse_param(v);
      } catch (const qcf::Error& e) {
        std::cerr << e.what() << "\n";
        return kBadInput;
      }
      const auto pairs = qcf::convergents(it->second.make(p, order), N);
      const std::string na = it->second.names.substr(0, 1), nb = it->second.names.substr(2, 1);
      nlohmann::json j = nlohmann::json::array();
      for (const auto& c : pairs) {
        if (as_json || !out_path.empty())
          j.push_back({{"N", c.index},
                       {na, nlohmann::json::parse(qcf::series_to_json(c.A))},
                       {nb, nlohmann::json::parse(qcf::series_to_json(c.B))},
                       {"stable_order", c.stable_order}});
        if (!as_json) {
          std::cout << na << "_" << c.index << " = " << qpoly(c.A, order) << "\n";
          std::cout << nb << "_" << c.index << " = " << qpoly(c.B, order) << "\n";
          if (c.stable_order >= 0) std::cout << "  ratio stable through q^" << c.stable_order << "\n";
        }
      }
      if (as_json) std::cout << j.dump(2) << "\n";
      if (!out_path.empty()) write_out(out_path, j.dump(2));
      return 0;
    }

    if (*t11) {
      const auto comma = qtext.find(',');
      const double re = std::stod(qtext.substr(0, comma));
      const double im = comma == std::string::npos ? 0.0 : std::stod(qtext.substr(comma + 1));
      const qcf::CF64 q(re, im);
      if (q.abs() >= 1) {
        std::cerr << "need |q| < 1\n";
        return kBadInput;
      }
      if (residue && (*residue < 1 || *residue > m)) {
        std::cerr << "--i must lie in 1.." << m << "\n";
        return kBadInput;
      }
      bool ok = true;
      nlohmann::json j = nlohmann::json::array();
      for (int i = residue.value_or(1); i <= residue.value_or(m); ++i) {
        const auto r = qcf::theorem11_eval(m, i, q, k, tol);
        ok = ok && r.pass;
        j.push_back({{"m", m}, {"i", i}, {"k", k}, {"depth", r.depth}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()},
                     {"diff", r.diff}, {"status", r.pass ? "pass" : "fail"}});
        if (!as_json)
          std::cout << "m=" << m << " i=" << i << " depth=" << r.depth << " lhs=" << r.lhs.str() << " rhs=" << r.rhs.str()
                    << " diff=" << std::scientific << std::setprecision(2) << r.diff << std::defaultfloat << " "
                    << (r.pass ? "pass" : "FAIL") << "\n";
      }
      if (as_json) std::cout << j.dump(2) << "\n";
      if (!out_path.empty()) write_out(out_path, j.dump(2));
      return ok ? 0 : 1;
    }
  } catch (const qcf::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == qcf::ErrorKind::Parse || e.kind() == qcf::ErrorKind::InvalidArgument ? kBadInput : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
