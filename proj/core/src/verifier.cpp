#include "qcf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace qcf {

namespace {

std::vector<Rat> build_grid(std::size_t n) {
  std::vector<Rat> out;
  for (long h = 2; out.size() < n; ++h) {
    // p/q with max(|p|, q) = h in lowest terms
    std::vector<Rat> level;
    for (long q = 1; q < h; ++q)
      if (std::gcd(h, q) == 1) level.emplace_back(h, q);
    for (long p = 1; p < h; ++p)
      if (std::gcd(p, h) == 1) level.emplace_back(p, h);
    for (const auto& r : level) {
      out.push_back(r);
      out.push_back(-r);
    }
  }
  return out;
}

bool is_degenerate(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateSpecialization:
    case ErrorKind::ZeroDenominatorFactor:
    case ErrorKind::NonInvertibleConstantTerm:
    case ErrorKind::DivisionByZero:
    case ErrorKind::ZeroOddPartialDenominator:
    case ErrorKind::ZeroMultiplier:
      return true;
    default:
      return false;
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string mono_str(const Monomial<Rat>& m) {
  std::string s = m.coeff.str();
  if (m.exp == 0 || m.is_zero()) return s;
  s += "*q";
  if (m.exp != 1) s += "^" + std::to_string(m.exp);
  return s;
}

std::string q_exponent(int t_index, int scale) {
  const Rat e(t_index, scale);
  return e.str();
}

template <class R>
std::optional<Mismatch> compare(const std::string& label, Series<R> lhs, Series<R> rhs, std::optional<int> mutate_k) {
  if (lhs.scale() != rhs.scale())
    throw Error(ErrorKind::ScaleMismatch, label + ": sides at scales " + std::to_string(lhs.scale()) + " and " +
                                              std::to_string(rhs.scale()));
  const int s = rhs.scale();
  if (mutate_k && *mutate_k >= 0 && *mutate_k * s <= rhs.order()) rhs[*mutate_k * s] += R(1);
  const int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k) {
    if (lhs[k] == rhs[k]) continue;
    return Mismatch{q_exponent(k, s), k, s, label, lhs[k].str(), rhs[k].str(), 0};
  }
  return std::nullopt;
}

struct Outcome {
  bool degenerate = false;
  std::string degenerate_what;
  std::optional<Mismatch> mismatch;
  int pairs = 0;
};

Outcome run_assignment(const IdentityCase& row, const Assignment& a, const VerifyOptions& opts,
                       std::vector<std::string>& rings) {
  Outcome out;
  std::vector<CheckPair> pairs;
  try {
    pairs = row.build(a, opts.order);
  } catch (const Error& e) {
    if (!is_degenerate(e.kind())) throw;
    out.degenerate = true;
    out.degenerate_what = e.what();
    return out;
  }
  for (const auto& p : pairs) {
    ++out.pairs;
    std::optional<Mismatch> mm;
    if (const auto* r = std::get_if<SeriesPair<Rat>>(&p.sides)) {
      if (std::find(rings.begin(), rings.end(), "Rat") == rings.end()) rings.emplace_back("Rat");
      mm = compare(p.label, r->first, r->second, opts.mutate_k);
    } else {
      const auto& e = std::get<SeriesPair<EisRat>>(p.sides);
      if (std::find(rings.begin(), rings.end(), "EisRat") == rings.end()) rings.emplace_back("EisRat");
      mm = compare(p.label, e.first, e.second, opts.mutate_k);
    }
    if (mm) {
      out.mismatch = std::move(mm);
      return out;
    }
  }
  return out;
}

std::map<std::string, std::string> record(const IdentityCase& row, const Assignment& a) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < row.params.size(); ++i) m[row.params[i].name] = mono_str(a[i]);
  return m;
}

constexpr int kRetryCap = 50;

}  // namespace

Rat grid_value(std::size_t k) {
  static std::mutex mu;
  static std::vector<Rat> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() <= k) cache = build_grid(std::max<std::size_t>(2 * k + 16, 256));
  return cache[k];
}

VerificationReport verify(const std::string& id, const VerifyOptions& opts) {
  const IdentityCase& row = find_identity(id);
  if (opts.order < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  if (opts.draws < 1) throw Error(ErrorKind::InvalidArgument, "draws must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.id = row.id;
  rep.order = opts.order;
  rep.draws = opts.draws;
  rep.seed = opts.seed;

  const auto bounds = row.degree_bounds(opts.order);
  const bool complete = std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.bound.has_value(); });
  rep.certificate = complete ? kDegreeBoundComplete : kSampled;

  auto finish = [&]() {
    rep.pass = !rep.first_mismatch && !rep.error;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  // returns false to stop
  auto check = [&](const Assignment& a) {
    Outcome o = run_assignment(row, a, opts, rep.rings);
    rep.pairs_checked += o.pairs;
    rep.assignments.push_back(record(row, a));
    if (o.degenerate) {
      rep.error = "degenerate grid point: " + o.degenerate_what;
      return false;
    }
    if (o.mismatch) {
      o.mismatch->assignment = rep.assignments.size() - 1;
      rep.first_mismatch = std::move(o.mismatch);
      return false;
    }
    return true;
  };

  try {
    if (complete) {
      // product grid, D_p + 1 distinct values per parameter
      const std::size_t np = row.params.size();
      std::vector<std::vector<Rat>> values(np);
      for (std::size_t i = 0; i < np; ++i) {
        const auto d = static_cast<std::size_t>(*bounds[i].bound) + 1;
        for (std::size_t k = 0; k < d; ++k) values[i].push_back(grid_value(opts.seed * d + k));
      }
      std::vector<std::size_t> idx(np, 0);
      while (true) {
        Assignment a;
        for (std::size_t i = 0; i < np; ++i) a.emplace_back(values[i][idx[i]], row.params[i].exps.front());
        if (!check(a)) return finish();
        std::size_t i = 0;
        while (i < np && ++idx[i] == values[i].size()) idx[i++] = 0;
        if (i == np) break;
      }
      return finish();
    }

    std::mt19937_64 rng(opts.seed ^ fnv1a(row.id));
    std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
    auto draw_value = [&]() {
      while (true) {
        const Rat r(num(rng), den(rng));
        if (!r.is_zero() && !(r.abs() == Rat(1))) return r;
      }
    };
    for (int d = 0; d < opts.draws; ++d) {
      bool done = false;
      for (int attempt = 0; attempt < kRetryCap && !done; ++attempt) {
        Assignment a;
        for (const auto& p : row.params) {
          std::uniform_int_distribution<std::size_t> pick(0, p.exps.size() - 1);
          const Rat v = draw_value();
          a.emplace_back(v, p.exps[pick(rng)]);
        }
        Outcome o = run_assignment(row, a, opts, rep.rings);
        if (o.degenerate) {
          ++rep.redraws;
          continue;
        }
        done = true;
        rep.pairs_checked += o.pairs;
        rep.assignments.push_back(record(row, a));
        if (o.mismatch) {
          o.mismatch->assignment = rep.assignments.size() - 1;
          rep.first_mismatch = std::move(o.mismatch);
          return finish();
        }
      }
      if (!done) {
        rep.error = "no admissible assignment after " + std::to_string(kRetryCap) + " draws";
        return finish();
      }
      if (row.params.empty()) break;
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return finish();
}

VerificationReport verify(const std::string& id, int order, int draws, std::uint64_t seed) {
  VerifyOptions o;
  o.order = order;
  o.draws = draws;
  o.seed = seed;
  return verify(id, o);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts, unsigned threads) {
  const auto& rows = registry();
  std::vector<VerificationReport> out(rows.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) out[i] = verify(rows[i].id, opts);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<IdentityInfo> list_identities() {
  std::vector<IdentityInfo> out;
  for (const auto& r : registry()) out.push_back({r.id, r.description, r.signature()});
  return out;
}

std::vector<DegreeBound> degree_bound_table(const std::string& id, int order) {
  return find_identity(id).degree_bounds(order);
}

}  // namespace qcf
