#include <doctest.h>

#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sqf/survey.hpp"
#include "sqf/survey_json.hpp"

using namespace sqf;
using oracle::Gen;

namespace {

const IntPoly kDeg6{1, 4, 10, 10, 5, 2, 1};
const IntPoly kCyclo{1, 1, 1, 1, 1};

// d -> least height of a rational r with S(f(r)) = d, by direct evaluation.
std::map<Int, std::uint64_t> brute_s(const IntPoly& f, long B, bool negatives = true, bool trial = true) {
  std::map<Int, std::uint64_t> out;
  for (long b = 1; b <= B; ++b) {
    for (long a = negatives ? -B : 0; a <= B; ++a) {
      if (std::gcd(a, b) != 1) continue;
      Rat v = poly::eval_rat(f, Rat(Int(a), Int(b)));
      if (v.is_zero()) continue;
      Int d = trial ? oracle::squarefree_trial(v.num() * v.den()) : arith::squarefree_part(v);
      std::uint64_t h = static_cast<std::uint64_t>(std::max(std::labs(a), b));
      auto [it, fresh] = out.emplace(d, h);
      if (!fresh) it->second = std::min(it->second, h);
    }
  }
  return out;
}

SurveyConfig config_for(const IntPoly& f, std::uint64_t B, std::uint64_t n, unsigned threads = 1) {
  SurveyConfig c;
  c.f = f;
  c.height = B;
  c.prime_bound = n;
  c.threads = threads;
  return c;
}

void check_against_brute(const SurveyConfig& c, bool trial = true) {
  auto res = survey::s_tilde(c);
  auto want = brute_s(c.f, static_cast<long>(c.height), c.include_negative_r, trial);
  REQUIRE(res.entries.size() == want.size());
  for (const auto& e : res.entries) {
    auto it = want.find(e.d);
    REQUIRE(it != want.end());
    REQUIRE(e.height() == it->second);
    Rat v = poly::eval_rat(c.f, e.r());
    REQUIRE((trial ? oracle::squarefree_trial(Int(v.num() * v.den())) : arith::squarefree_part(v)) == e.d);
  }
  for (std::size_t i = 1; i < res.entries.size(); ++i) REQUIRE(res.entries[i - 1].d < res.entries[i].d);
}

}  // namespace

TEST_CASE("enumerate_heights") {
  CHECK(survey::enumerate_heights(1).size() == 3);
  auto two = survey::enumerate_heights(2);
  CHECK(two.size() == 7);
  std::set<Rat> want{Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(Int(1), Int(2)), Rat(Int(-1), Int(2))};
  CHECK(std::set<Rat>(two.begin(), two.end()) == want);
  CHECK(survey::enumerate_heights(1, false).size() == 2);

  std::size_t count = 0;
  for (long b = 1; b <= 10; ++b) {
    for (long a = -10; a <= 10; ++a) count += std::gcd(a, b) == 1;
  }
  CHECK(survey::enumerate_heights(10).size() == count);

  auto all = survey::enumerate_heights(200);
  std::set<Rat> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  for (const auto& r : all) REQUIRE(arith::height(r) <= 200);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto &p = all[i - 1], &q = all[i];
    REQUIRE((p.den() < q.den() || (p.den() == q.den() && p.num() < q.num())));
  }
  CHECK_THROWS_AS(survey::enumerate_heights(0), InvalidInput);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config_for(IntPoly{0, 0, 1}, 5, 10).validate(), InvalidInput);
  CHECK_THROWS_AS(config_for(kCyclo, 0, 10).validate(), InvalidInput);
  CHECK_THROWS_AS(config_for(kCyclo, 5, 2).validate(), InvalidInput);
  CHECK_NOTHROW(config_for(kCyclo, 5, 3).validate());
  CHECK_THROWS_AS(survey::s_tilde(config_for(IntPoly{0, 0, 1}, 5, 10)), InvalidInput);
}

TEST_CASE("s_tilde of x") {
  auto res = survey::s_tilde(config_for(IntPoly{0, 1}, 3, 5));
  CHECK(res.s_tilde() == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});
  for (const auto& e : res.entries) {
    if (e.d == 6) CHECK(e.r() == Rat(Int(3), Int(2)));
    if (e.d == 1) CHECK(e.r() == Rat(1));
  }
  CHECK(res.stats.rationals == 15);
  CHECK(res.stats.zero_values == 1);
}

TEST_CASE("s_tilde agrees with direct factorization") {
  check_against_brute(config_for(kDeg6, 40, 10));
  check_against_brute(config_for(kCyclo, 50, 10));
  check_against_brute(config_for(IntPoly{-3, 0, 0, 0, 0, 0, 0, 1}, 25, 10));
  check_against_brute(config_for(IntPoly{2, 0, -1, 0, -8, 0, -1, 0, 2}, 20, 10));
  auto c = config_for(IntPoly{0, -1, 0, 1}, 60, 10);
  c.include_negative_r = false;
  check_against_brute(c);
  Gen g(51);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = g.separable(static_cast<int>(g.range(1, 7)), 40);
    check_against_brute(config_for(f, static_cast<std::uint64_t>(g.range(1, 18)), 5));
  }
}

TEST_CASE("sieve paths agree") {
  Gen g(52);
  for (int i = 0; i < 12; ++i) {
    IntPoly f = g.separable(static_cast<int>(g.range(3, 8)), 30);
    auto base = config_for(f, 60, 10);
    auto ref = survey::s_tilde(base);
    for (std::uint64_t sb : {3u, 16u, 97u, 4096u}) {
      auto c = base;
      c.sieve_bound = sb;
      auto res = survey::s_tilde(c);
      REQUIRE(res.s_tilde() == ref.s_tilde());
      for (std::size_t k = 0; k < res.entries.size(); ++k) {
        REQUIRE(res.entries[k].a == ref.entries[k].a);
        REQUIRE(res.entries[k].b == ref.entries[k].b);
      }
    }
  }
  // Coefficients beyond 64 bits take the bignum path.
  std::vector<Int> big{Int(3), Int(0), Int(1), Int("100000000000000000000")};
  IntPoly f(big);
  auto res = survey::s_tilde(config_for(f, 12, 5));
  CHECK(res.stats.bignum_values > 0);
  check_against_brute(config_for(f, 12, 5), false);
}

TEST_CASE("the degree 6 values lie in restricted classes") {
  auto res = survey::s_tilde(config_for(kDeg6, 150, 10));
  for (const auto& d : res.s_tilde()) {
    REQUIRE(arith::mod(d, 8) == 1);
    Int r3 = arith::mod(d, 3);
    REQUIRE((r3 == 0 || r3 == 1));
  }
  CHECK(survey::coverage(res.s_tilde(), 3) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("coverage") {
  CHECK(survey::coverage({Int(1), Int(2), Int(3)}, 3) == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(survey::coverage({Int(-1), Int(7)}, 5) == std::vector<std::uint64_t>{2, 4});
  CHECK(survey::coverage({}, 7).empty());
  auto res = survey::s_tilde(config_for(kCyclo, 100, 10));
  CHECK(survey::coverage(res.s_tilde(), 5) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("coverage reports") {
  auto rep = survey::exceptional_primes(config_for(kCyclo, 120, 30));
  CHECK(rep.s_tilde_size > 0);
  for (const auto& [p, residues] : rep.coverage) {
    std::size_t nonzero = std::count_if(residues.begin(), residues.end(), [](auto r) { return r != 0; });
    bool exceptional = std::find(rep.exceptional.begin(), rep.exceptional.end(), p) != rep.exceptional.end();
    REQUIRE(exceptional == (nonzero < p - 1));
  }
  CHECK(std::find(rep.exceptional.begin(), rep.exceptional.end(), 5) != rep.exceptional.end());
  CHECK(rep.coverage.size() == 10);
  CHECK(rep.witnesses.size() <= 1000);
  for (const auto& w : rep.witnesses) {
    REQUIRE(arith::squarefree_part(poly::eval_rat(kCyclo, w.r())) == w.d);
  }
  nlohmann::json j = rep;
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["kind"] == "coverage");
  std::string csv = survey::coverage_csv(rep);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}

TEST_CASE("coverage grows with the height bound") {
  auto small = survey::exceptional_primes(config_for(kCyclo, 40, 60));
  auto large = survey::exceptional_primes(config_for(kCyclo, 80, 60));
  auto s1 = survey::s_tilde(config_for(kCyclo, 40, 60)).s_tilde();
  auto s2 = survey::s_tilde(config_for(kCyclo, 80, 60)).s_tilde();
  CHECK(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
  CHECK(std::includes(small.exceptional.begin(), small.exceptional.end(), large.exceptional.begin(),
                      large.exceptional.end()));
}

TEST_CASE("thread count does not change results") {
  for (const IntPoly& f : {kCyclo, kDeg6, IntPoly{-3, 0, 0, 0, 0, 0, 0, 1}}) {
    auto one = survey::exceptional_primes(config_for(f, 90, 100, 1));
    auto three = survey::exceptional_primes(config_for(f, 90, 100, 3));
    auto eight = survey::exceptional_primes(config_for(f, 90, 100, 8));
    std::string a = nlohmann::json(one).dump(), b = nlohmann::json(three).dump(), c = nlohmann::json(eight).dump();
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("SQF_THREADS") {
  setenv("SQF_THREADS", "4", 1);
  CHECK(survey::resolve_threads(0) == 4);
  CHECK(survey::resolve_threads(2) == 2);
  setenv("SQF_THREADS", "zero", 1);
  CHECK_THROWS_AS(survey::resolve_threads(0), InvalidInput);
  unsetenv("SQF_THREADS");
  CHECK(survey::resolve_threads(0) == 1);
}

TEST_CASE("count_series") {
  auto s = survey::count_series(IntPoly{0, 1}, 5, 1, {1}, 1);
  REQUIRE(s.e_counts.size() == 1);
  CHECK(s.e_counts[0] == 1u);
  CHECK(s.d_tilde_counts[0] == 1u);

  const IntPoly f{0, -1, 0, 1};
  std::vector<std::uint64_t> ts{1, 2, 5, 10, 20, 40, 100, 1000};
  auto series = survey::count_series(f, 7, 3, ts, 40);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] > 40) {
      CHECK_FALSE(series.e_counts[i]);
      continue;
    }
    auto S = brute_s(f, static_cast<long>(ts[i]));
    std::uint64_t e = 0;
    for (const auto& [d, h] : S) e += arith::mod(d, 7) == 3;
    REQUIRE(series.e_counts[i] == e);
  }
  auto S40 = brute_s(f, 40);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::uint64_t dt = 0;
    for (const auto& [d, h] : S40) dt += arith::mod(d, 7) == 3 && abs(d) <= Int(static_cast<unsigned long>(ts[i]));
    REQUIRE(series.d_tilde_counts[i] == dt);
    if (i > 0) REQUIRE(series.d_tilde_counts[i] >= series.d_tilde_counts[i - 1]);
  }
  nlohmann::json j = series;
  CHECK(j.dump().find("lower bound") != std::string::npos);
  CHECK_THROWS_AS(survey::count_series(f, 7, 14, ts, 40), InvalidInput);
  CHECK_THROWS_AS(survey::count_series(f, 7, 3, {}, 40), InvalidInput);
  CHECK_THROWS_AS(survey::count_series(f, 7, 3, {5, 2}, 40), InvalidInput);
}

TEST_CASE("family counts") {
  auto c = survey::family_counts(1, 1, 1);
  CHECK(c.enumerated == 6);
  CHECK(c.negative_lc == 3);
  CHECK(c.inseparable == 0);
  CHECK(c.separable == 3);
  auto q = survey::family_counts(2, 2, 1);
  // lc = 1: x^2 + bx + c with b, c in {-1, 0, 1}; only x^2 is inseparable.
  CHECK(q.separable == 8);
  CHECK(q.inseparable == 1);
  CHECK(survey::family_size_with_positive_lc(4, 9, 3) == 141'236'424);
  Gen g(53);
  for (int i = 0; i < 10; ++i) {
    int lo = static_cast<int>(g.range(1, 3)), hi = lo + static_cast<int>(g.range(0, 1));
    std::int64_t cb = g.range(1, 2);
    std::uint64_t sep = 0, insep = 0;
    // Odometer oracle over coefficient vectors with lc > 0.
    for (int n = lo; n <= hi; ++n) {
      std::vector<long> v(n + 1, -cb);
      while (true) {
        if (v[n] > 0) {
          std::vector<Int> coeffs(v.begin(), v.end());
          (poly::discriminant(IntPoly(coeffs)) != 0 ? sep : insep) += 1;
        }
        int k = 0;
        while (k <= n && v[k] == cb) v[k++] = -cb;
        if (k > n) break;
        ++v[k];
      }
    }
    auto fc = survey::family_counts(lo, hi, cb);
    REQUIRE(fc.separable == sep);
    REQUIRE(fc.inseparable == insep);
  }
}

TEST_CASE("family sample") {
  auto a = survey::family_sample(4, 9, 3, 50, 7);
  auto b = survey::family_sample(4, 9, 3, 50, 7);
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  std::set<std::string> seen;
  for (const auto& f : a) {
    CHECK(f.degree() >= 4);
    CHECK(f.degree() <= 9);
    CHECK(f.lc() > 0);
    for (const auto& c : f.coeffs()) CHECK(abs(c) <= 3);
    CHECK(poly::is_separable(f));
    CHECK(seen.insert(f.to_csv()).second);
  }
  CHECK(survey::family_sample(4, 9, 3, 50, 8) != a);
  CHECK_THROWS_AS(survey::family_sample(1, 1, 1, 5, 1), BudgetExhausted);
}

TEST_CASE("family scan of a tiny family") {
  FamilyScanConfig fc;
  fc.degree_lo = 1;
  fc.degree_hi = 1;
  fc.coeff_bound = 1;
  fc.height = 6;
  fc.prime_bound = 13;
  fc.threads = 1;
  auto rep = survey::family_scan(fc);
  REQUIRE(rep.counts);
  CHECK(rep.counts->separable == 3);
  REQUIRE(rep.members.size() == 3);
  std::uint64_t max_exc = 0;
  bool any = false;
  for (const auto& m : rep.members) {
    auto S = brute_s(m.f, 6);
    std::vector<std::uint64_t> exc;
    for (auto p : arith::primes_up_to(13)) {
      std::set<std::uint64_t> res;
      for (const auto& [d, h] : S) res.insert(mpz_fdiv_ui(d.get_mpz_t(), p));
      res.erase(0);
      if (res.size() < p - 1) exc.push_back(p);
    }
    CHECK(m.exceptional == exc);
    CHECK(m.s_tilde_size == S.size());
    for (auto p : exc) {
      max_exc = std::max(max_exc, p);
      any = true;
    }
  }
  CHECK(rep.max_exceptional.has_value() == any);
  if (any) CHECK(*rep.max_exceptional == max_exc);
  nlohmann::json j = rep;
  CHECK(j["counts"]["reference_size"] == kReferenceFamilySize);
  CHECK(j["counts"]["delta_from_reference"] == 3 - static_cast<std::int64_t>(kReferenceFamilySize));
}
