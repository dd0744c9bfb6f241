#include <algorithm>
#include <chrono>
#include <thread>

#include "sqf/survey.hpp"
#include "value_sieve.hpp"

namespace sqf::survey {
namespace {

bool entry_less(const SEntry& x, const SEntry& y) {
  if (int c = cmp(x.d, y.d); c != 0) return c < 0;
  if (x.height() != y.height()) return x.height() < y.height();
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

// Sort and keep the least-height witness of each d.
void canonicalize(std::vector<SEntry>& v) {
  std::sort(v.begin(), v.end(), entry_less);
  auto last = std::unique(v.begin(), v.end(), [](const SEntry& x, const SEntry& y) { return x.d == y.d; });
  v.erase(last, v.end());
}

void add(SurveyStats& into, const SurveyStats& s) {
  into.rationals += s.rationals;
  into.zero_values += s.zero_values;
  into.sieved_completely += s.sieved_completely;
  into.prime_cofactors += s.prime_cofactors;
  into.square_cofactors += s.square_cofactors;
  into.semiprime_cofactors += s.semiprime_cofactors;
  into.rho_factorizations += s.rho_factorizations;
  into.bignum_values += s.bignum_values;
}

}  // namespace

SurveyResult s_tilde(const SurveyConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(config.threads), config.height));

  const detail::SieveTables tables(config.f, config.height, config.sieve_bound);
  std::vector<std::vector<SEntry>> parts(threads);
  std::vector<SurveyStats> stats(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](unsigned t) {
    try {
      detail::ValueSieve sieve(tables, config.height, config.include_negative_r);
      for (std::uint64_t b = 1 + t; b <= config.height; b += threads) {
        sieve.run_line(b, parts[t], stats[t]);
        if (parts[t].size() > (std::size_t(1) << 20)) canonicalize(parts[t]);
      }
      canonicalize(parts[t]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SurveyResult res;
  for (unsigned t = 0; t < threads; ++t) {
    add(res.stats, stats[t]);
    std::move(parts[t].begin(), parts[t].end(), std::back_inserter(res.entries));
    parts[t].clear();
    parts[t].shrink_to_fit();
  }
  canonicalize(res.entries);
  res.stats.sieve_bound = tables.P;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<std::uint64_t> coverage(const std::vector<Int>& s_set, std::uint64_t p) {
  if (p < 2) throw InvalidInput("modulus must be at least 2");
  std::vector<char> seen(p, 0);
  std::uint64_t count = 0;
  for (const auto& d : s_set) {
    auto r = mpz_fdiv_ui(d.get_mpz_t(), p);
    if (!seen[r]) {
      seen[r] = 1;
      if (++count == p) break;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (seen[r]) out.push_back(r);
  }
  return out;
}

CoverageReport coverage_report(const SurveyConfig& config, const SurveyResult& result) {
  CoverageReport rep;
  rep.config = config;
  rep.s_tilde_size = result.entries.size();
  rep.stats = result.stats;
  rep.seconds = result.seconds;
  const auto values = result.s_tilde();
  for (auto p : arith::primes_up_to(config.prime_bound)) {
    auto cov = coverage(values, p);
    std::size_t nonzero = cov.size() - (!cov.empty() && cov.front() == 0 ? 1 : 0);
    if (nonzero < p - 1) rep.exceptional.push_back(p);
    rep.coverage.emplace(p, std::move(cov));
  }
  const std::size_t n = result.entries.size();
  const std::size_t k = config.witness_sample;
  if (k == 0 || k >= n) {
    rep.witnesses = result.entries;
  } else {
    for (std::size_t j = 0; j < k; ++j) rep.witnesses.push_back(result.entries[j * n / k]);
  }
  return rep;
}

CoverageReport exceptional_primes(const SurveyConfig& config) {
  auto res = s_tilde(config);
  return coverage_report(config, res);
}

CountSeries count_series(const IntPoly& f, const Int& p, const Int& m,
                         const std::vector<std::uint64_t>& thresholds, std::uint64_t B, unsigned threads) {
  if (p < 2) throw InvalidInput("modulus must be at least 2");
  if (arith::mod(m, p) == 0) throw InvalidInput("p must not divide m");
  if (thresholds.empty()) throw InvalidInput("at least one threshold is needed");
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) throw InvalidInput("thresholds must be ascending");
  SurveyConfig cfg;
  cfg.f = f;
  cfg.height = B;
  cfg.threads = threads;
  auto res = s_tilde(cfg);

  const Int target = arith::mod(m, p);
  std::vector<std::uint64_t> heights;
  std::vector<Int> sizes;
  for (const auto& e : res.entries) {
    if (arith::mod(e.d, p) != target) continue;
    heights.push_back(e.height());
    sizes.push_back(abs(e.d));
  }
  std::sort(heights.begin(), heights.end());
  std::sort(sizes.begin(), sizes.end());

  CountSeries cs{p, m, B, thresholds, {}, {}};
  for (auto t : thresholds) {
    if (t <= B) {
      cs.e_counts.push_back(static_cast<std::uint64_t>(
          std::upper_bound(heights.begin(), heights.end(), t) - heights.begin()));
    } else {
      cs.e_counts.push_back(std::nullopt);
    }
    Int tt(static_cast<unsigned long>(t));
    cs.d_tilde_counts.push_back(
        static_cast<std::uint64_t>(std::upper_bound(sizes.begin(), sizes.end(), tt) - sizes.begin()));
  }
  return cs;
}

}  // namespace sqf::survey
