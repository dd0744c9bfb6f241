#include <algorithm>
#include <cstdint>
#include <vector>

#include "sqf/arith.hpp"
#include "sqf/detail/wide.hpp"

namespace sqf::arith {

using detail::u128;

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 127) return detail::is_prime_u128(detail::to_u128(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
  if (n <= 2) return 2;
  for (std::uint64_t c = n | 1;; c += 2) {
    if (detail::is_prime_u64(c)) return c;
  }
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidInput(a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return mod(r, m);
}

Int isqrt(const Int& n) {
  if (n < 0) throw InvalidInput("isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int largest_prime_factor(const Int& n) {
  auto fac = factor(n);
  if (fac.factors.empty()) return 1;
  return fac.factors.back().first;
}

}  // namespace sqf::arith
