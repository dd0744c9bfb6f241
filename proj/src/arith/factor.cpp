#include <algorithm>
#include <map>
#include <vector>

#include "sqf/arith.hpp"
#include "sqf/detail/wide.hpp"

namespace sqf {

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

namespace arith {
namespace {

constexpr std::uint64_t kTrialBound = 10'000;

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
  return primes;
}

// Generic Brent-Pollard rho for cofactors beyond the 126-bit kernels.
Int brent_mpz(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x = 2, ys = 2, q = 1, g = 1;
    auto step = [&](Int& v) {
      v = v * v + c;
      v %= n;
    };
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs(Int(x - y))) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(Int(abs(Int(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Int& n, std::map<Int, unsigned>& acc, unsigned mult) {
  if (n == 1) return;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 126) {
    std::vector<detail::u128> ps;
    detail::factor_u128(detail::to_u128(n), ps);
    for (auto p : ps) acc[detail::from_u128(p)] += mult;
    return;
  }
  if (is_prime(n)) {
    acc[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split(root, acc, mult * static_cast<unsigned>(k));
        return;
      }
    }
  }
  Int d = brent_mpz(n);
  split(d, acc, mult);
  split(Int(n / d), acc, mult);
}

}  // namespace

Factorization factor(const Int& n) {
  if (n == 0) throw InvalidInput("factor: zero has no factorization");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> acc;
  for (std::uint64_t p : trial_primes()) {
    if (m == 1) break;
    if (m < Int(p) * Int(p)) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      acc[Int(p)] += e;
    }
  }
  if (m != 1) {
    if (m < Int(kTrialBound) * Int(kTrialBound)) {
      acc[m] += 1;
    } else {
      split(m, acc, 1);
    }
  }
  for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw InvalidInput("squarefree part of zero is undefined");
  auto fac = factor(n);
  Int d = fac.sign;
  for (const auto& [p, e] : fac.factors) {
    if (e % 2 == 1) d *= p;
  }
  return d;
}

Int squarefree_part(const Rat& r) {
  if (r.is_zero()) throw InvalidInput("squarefree part of zero is undefined");
  return squarefree_part(Int(r.num() * r.den()));
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  auto fac = factor(n);
  return std::all_of(fac.factors.begin(), fac.factors.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

long ord_p(const Int& n, const Int& p) {
  if (n == 0) throw InvalidInput("ord_p of zero is undefined");
  if (p < 2) throw InvalidInput("ord_p needs a prime");
  Int m = n;
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Rat& r, const Int& p) {
  if (r.is_zero()) throw InvalidInput("ord_p of zero is undefined");
  return ord_p(r.num(), p) - ord_p(r.den(), p);
}

Int height(const Rat& r) { return std::max(Int(abs(r.num())), r.den()); }

}  // namespace arith
}  // namespace sqf
