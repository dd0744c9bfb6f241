#include <chrono>
#include <random>
#include <set>

#include "sqf/detail/wide.hpp"
#include "sqf/survey.hpp"

namespace sqf::survey {
namespace {

using sqf::detail::u128;
using u64 = std::uint64_t;

constexpr u64 kModulus = (u64(1) << 61) - 1;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kModulus); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a)) {
    if (e & 1) r = mulmod(r, a);
  }
  return r;
}

u64 to_field(std::int64_t c) {
  return c >= 0 ? static_cast<u64>(c) % kModulus : kModulus - static_cast<u64>(-c) % kModulus;
}

void trim(std::vector<u64>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// True when gcd(f, f') is constant mod a 61-bit prime, which proves
// disc(f) != 0. False means undecided.
bool separable_mod_prime(const std::vector<std::int64_t>& c) {
  std::vector<u64> a, b;
  for (auto x : c) a.push_back(to_field(x));
  for (std::size_t i = 1; i < c.size(); ++i) b.push_back(mulmod(a[i], i));
  trim(a);
  trim(b);
  if (a.size() != c.size() || b.size() + 1 != a.size()) return false;
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), kModulus - 2);
    while (a.size() >= b.size()) {
      const u64 q = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + kModulus - mulmod(q, b[i])) % kModulus;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

bool separable(const std::vector<std::int64_t>& c) {
  if (separable_mod_prime(c)) return true;
  std::vector<Int> big;
  for (auto x : c) big.emplace_back(static_cast<long>(x));
  return poly::is_separable(IntPoly(std::move(big)));
}

IntPoly to_poly(const std::vector<std::int64_t>& c) {
  std::vector<Int> big;
  for (auto x : c) big.emplace_back(static_cast<long>(x));
  return IntPoly(std::move(big));
}

void check_family(int lo, int hi, std::int64_t c) {
  if (lo < 1 || hi < lo) throw InvalidInput("degree range must satisfy 1 <= lo <= hi");
  if (c < 1) throw InvalidInput("coefficient bound must be positive");
  if (hi > 64 || c > 1'000'000) throw InvalidInput("family too large");
}

// Visits every lc > 0 member; stops early when fn returns false.
template <typename Fn>
void for_each_member(int lo, int hi, std::int64_t c, Fn&& fn) {
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::int64_t> v(n + 1, -c);
    v[n] = 1;
    while (true) {
      if (!fn(v)) return;
      int i = 0;
      while (i <= n) {
        const std::int64_t top = c;
        if (v[i] < top) {
          ++v[i];
          break;
        }
        v[i] = i == n ? 1 : -c;
        ++i;
      }
      if (i > n) break;
    }
  }
}

}  // namespace

std::uint64_t family_size_with_positive_lc(int lo, int hi, std::int64_t c) {
  check_family(lo, hi, c);
  u128 total = 0;
  for (int n = lo; n <= hi; ++n) {
    u128 m = static_cast<u128>(c);
    for (int i = 0; i < n; ++i) m *= static_cast<u128>(2 * c + 1);
    total += m;
  }
  if (total >> 64) throw InvalidInput("family too large");
  return static_cast<std::uint64_t>(total);
}

FamilyCounts family_counts(int lo, int hi, std::int64_t c) {
  FamilyCounts fc;
  const u64 positive = family_size_with_positive_lc(lo, hi, c);
  fc.negative_lc = positive;
  fc.enumerated = 2 * positive;
  for_each_member(lo, hi, c, [&](const std::vector<std::int64_t>& v) {
    if (separable(v)) {
      ++fc.separable;
    } else {
      ++fc.inseparable;
    }
    return true;
  });
  return fc;
}

std::vector<IntPoly> family_sample(int lo, int hi, std::int64_t c, std::size_t count, std::uint64_t seed) {
  check_family(lo, hi, c);
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t range) { return rng() % range; };
  std::set<std::vector<std::int64_t>> seen;
  std::vector<IntPoly> out;
  std::uint64_t draws = 0;
  while (out.size() < count) {
    if (++draws > 1000 * (count + 10)) throw BudgetExhausted("family sample: too many rejected draws");
    const int n = lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    std::vector<std::int64_t> v(n + 1);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(uniform(2 * c + 1)) - c;
    v[n] = 1 + static_cast<std::int64_t>(uniform(c));
    if (seen.count(v) || !separable(v)) continue;
    seen.insert(v);
    out.push_back(to_poly(v));
  }
  return out;
}

FamilyReport family_scan(const FamilyScanConfig& config) {
  check_family(config.degree_lo, config.degree_hi, config.coeff_bound);
  const auto start = std::chrono::steady_clock::now();
  FamilyReport rep;
  rep.config = config;

  auto scan_one = [&](const IntPoly& f) {
    SurveyConfig sc;
    sc.f = f;
    sc.height = config.height;
    sc.prime_bound = config.prime_bound;
    sc.include_negative_r = config.include_negative_r;
    sc.threads = config.threads;
    auto cr = exceptional_primes(sc);
    FamilyMember m{f, cr.exceptional, cr.s_tilde_size};
    if (!m.exceptional.empty()) {
      rep.max_exceptional = std::max(rep.max_exceptional.value_or(0), m.exceptional.back());
    }
    rep.members.push_back(std::move(m));
  };

  if (config.count_only || config.sample == 0) {
    rep.counts = family_counts(config.degree_lo, config.degree_hi, config.coeff_bound);
  }
  if (!config.count_only) {
    if (config.sample > 0) {
      for (const auto& f : family_sample(config.degree_lo, config.degree_hi, config.coeff_bound, config.sample,
                                         config.seed)) {
        scan_one(f);
      }
    } else {
      for_each_member(config.degree_lo, config.degree_hi, config.coeff_bound,
                      [&](const std::vector<std::int64_t>& v) {
                        if (separable(v)) scan_one(to_poly(v));
                        return true;
                      });
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sqf::survey
