#include "value_sieve.hpp"

#include <algorithm>
#include <numeric>

namespace sqf::survey::detail {

namespace {

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

Int squarefree_small(std::uint64_t b) {
  Int s = 1;
  for (std::uint64_t p = 2; p * p <= b; ++p) {
    unsigned e = 0;
    while (b % p == 0) {
      b /= p;
      ++e;
    }
    if (e % 2 == 1) s *= static_cast<unsigned long>(p);
  }
  if (b > 1) s *= static_cast<unsigned long>(b);
  return s;
}

Int combine_odd(const Int& part, std::uint64_t b) {
  Int sb = squarefree_small(b);
  Int g = gcd(part, sb);
  return part * sb / (g * g);
}

}  // namespace

std::uint64_t ValueSieve::default_sieve_bound(const IntPoly& f, std::uint64_t B) {
  // Large enough that leftovers are usually below P^3; capped so the per-line
  // pass over the primes stays cheap next to the line length.
  Int bound = 0;
  Int Bn = 1;
  for (int i = 0; i <= f.degree(); ++i) {
    bound += abs(f.coeffs()[i]) * Bn;
    Bn *= static_cast<unsigned long>(B);
  }
  std::uint64_t P = 1 << 12;
  while (P < (std::uint64_t(1) << 21)) {
    Int cube = Int(static_cast<unsigned long>(P));
    cube = cube * cube * cube;
    if (cube >= bound) break;
    P <<= 1;
  }
  return P;
}

SieveTables::SieveTables(const IntPoly& poly, std::uint64_t B, std::uint64_t sieve_bound)
    : f(poly), P(sieve_bound ? sieve_bound : ValueSieve::default_sieve_bound(poly, B)) {
  if (P < 3 || P > (std::uint64_t(1) << 32)) throw InvalidInput("sieve bound must lie in [3, 2^32]");
  Int bound = 0;
  Int Bn = 1;
  bool small_coeffs = true;
  for (const auto& a : f.coeffs()) {
    if (!a.fits_slong_p()) small_coeffs = false;
    bound += abs(a) * Bn;
    Bn *= static_cast<unsigned long>(B);
  }
  wide = small_coeffs && mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125;
  if (!wide) return;

  for (const auto& a : f.coeffs()) c.push_back(a.get_si());
  const Int& lc = f.lc();
  for (auto p64 : arith::primes_up_to(P)) {
    const auto p = static_cast<std::uint32_t>(p64);
    bool all = false;
    auto r = poly::roots_mod_small_prime(c, p, &all);
    if (all || mpz_divisible_ui_p(lc.get_mpz_t(), p)) {
      special.push_back(p);
      continue;
    }
    if (r.empty()) continue;
    primes.push_back(p);
    root_offset.push_back(static_cast<std::uint32_t>(roots.size()));
    roots.insert(roots.end(), r.begin(), r.end());
  }
  root_offset.push_back(static_cast<std::uint32_t>(roots.size()));
}

ValueSieve::ValueSieve(const SieveTables& tables, std::uint64_t B, bool include_negative)
    : t_(tables), n_(tables.f.degree()), B_(B), a_lo_(include_negative ? -static_cast<std::int64_t>(B) : 0) {
  if (!t_.wide) return;
  const std::size_t len = static_cast<std::size_t>(static_cast<std::int64_t>(B) - a_lo_ + 1);
  value_.resize(len);
  part_.resize(len);
  sign_.resize(len);
}

void ValueSieve::strip(std::size_t i, std::uint64_t p) {
  u128 v = value_[i];
  unsigned e = 0;
  if ((v >> 64) == 0) {
    auto w = static_cast<std::uint64_t>(v);
    while (w % p == 0) {
      w /= p;
      ++e;
    }
    v = w;
  } else {
    while (v % p == 0) {
      v /= p;
      ++e;
    }
  }
  value_[i] = v;
  if (e % 2 == 1) part_[i] *= p;
}

void ValueSieve::run_line(std::uint64_t b, std::vector<SEntry>& out, SurveyStats& stats) {
  if (!t_.wide) {
    run_line_bignum(b, out, stats);
    return;
  }
  const auto B = static_cast<std::int64_t>(B_);
  const std::size_t len = value_.size();

  std::vector<i128> bpow(n_ + 1);
  bpow[0] = 1;
  for (int i = 1; i <= n_; ++i) bpow[i] = bpow[i - 1] * static_cast<i128>(b);

  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t a = a_lo_ + static_cast<std::int64_t>(i);
    sign_[i] = 0;
    if (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), b) != 1) continue;
    ++stats.rationals;
    i128 acc = t_.c[n_];
    for (int k = n_ - 1; k >= 0; --k) acc = acc * a + static_cast<i128>(t_.c[k]) * bpow[n_ - k];
    if (acc == 0) {
      ++stats.zero_values;
      continue;
    }
    sign_[i] = acc < 0 ? -1 : 1;
    value_[i] = abs128(acc);
    part_[i] = 1;
  }

  for (auto p : t_.special) {
    for (std::size_t i = 0; i < len; ++i) {
      if (sign_[i] != 0 && value_[i] % p == 0) strip(i, p);
    }
  }

  for (std::size_t k = 0; k < t_.primes.size(); ++k) {
    const std::uint64_t p = t_.primes[k];
    const std::uint64_t bm = b % p;
    if (bm == 0) continue;
    const auto sp = static_cast<std::int64_t>(p);
    const std::int64_t lo_mod = ((a_lo_ % sp) + sp) % sp;
    for (std::uint32_t j = t_.root_offset[k]; j < t_.root_offset[k + 1]; ++j) {
      const auto r = static_cast<std::int64_t>(bm * t_.roots[j] % p);
      std::int64_t a = a_lo_ + (r - lo_mod + sp) % sp;
      for (; a <= B; a += sp) {
        const auto i = static_cast<std::size_t>(a - a_lo_);
        if (sign_[i] != 0) strip(i, p);
      }
    }
  }

  const u128 P = t_.P;
  const u128 P2 = P * P;
  const u128 P3 = P2 * P;
  std::vector<u128> factors;
  for (std::size_t i = 0; i < len; ++i) {
    if (sign_[i] == 0) continue;
    u128 c = value_[i];
    u128 part = part_[i];
    if (c == 1) {
      ++stats.sieved_completely;
    } else if (c < P2 || sqf::detail::is_prime_u128(c)) {
      ++stats.prime_cofactors;
      part *= c;
    } else if (c < P3) {
      // Two prime factors above P: a square, or two distinct primes.
      if (sqf::detail::is_square_u128(c)) {
        ++stats.square_cofactors;
      } else {
        ++stats.semiprime_cofactors;
        part *= c;
      }
    } else {
      ++stats.rho_factorizations;
      factors.clear();
      sqf::detail::factor_u128(c, factors);
      std::sort(factors.begin(), factors.end());
      for (std::size_t s = 0; s < factors.size();) {
        std::size_t t = s;
        while (t < factors.size() && factors[t] == factors[s]) ++t;
        if ((t - s) % 2 == 1) part *= factors[s];
        s = t;
      }
    }
    Int d = sqf::detail::from_u128(part);
    if (n_ % 2 == 1) d = combine_odd(d, b);
    if (sign_[i] < 0) d = -d;
    out.push_back({std::move(d), a_lo_ + static_cast<std::int64_t>(i), b});
  }
}

void ValueSieve::run_line_bignum(std::uint64_t b, std::vector<SEntry>& out, SurveyStats& stats) {
  const auto B = static_cast<std::int64_t>(B_);
  std::vector<Int> bpow(n_ + 1);
  bpow[0] = 1;
  for (int i = 1; i <= n_; ++i) bpow[i] = bpow[i - 1] * static_cast<unsigned long>(b);
  for (std::int64_t a = a_lo_; a <= B; ++a) {
    if (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), b) != 1) continue;
    ++stats.rationals;
    Int acc = t_.f.lc();
    for (int k = n_ - 1; k >= 0; --k) acc = acc * a + t_.f.coeffs()[k] * bpow[n_ - k];
    if (acc == 0) {
      ++stats.zero_values;
      continue;
    }
    ++stats.bignum_values;
    if (n_ % 2 == 1) acc *= static_cast<unsigned long>(b);
    out.push_back({arith::squarefree_part(acc), a, b});
  }
}

}  // namespace sqf::survey::detail
