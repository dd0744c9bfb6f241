#pragma once

// Fixed-width fast paths for primality and factoring. Everything here is an
// internal optimisation behind the arbitrary-precision interfaces in arith.hpp.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sqf::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 kU128Max = ~u128(0);

// Values below this bound use the 128-bit Montgomery kernels.
inline constexpr u128 kWideLimit = u128(1) << 126;

bool is_prime_u64(u64 n);
bool is_prime_u128(u128 n);

// Returns a nontrivial factor of an odd composite n that is not a perfect
// power of a prime found by the caller. Deterministic: tries x^2 + c for
// c = 1, 2, 3, ... in order.
u64 brent_factor_u64(u64 n);
u128 brent_factor_u128(u128 n);

// Appends the prime factors of n (n > 1, n odd, with multiplicity, unsorted).
void factor_u128(u128 n, std::vector<u128>& out);

u64 isqrt_u128(u128 n);
bool is_square_u128(u128 n, u64* root = nullptr);

inline u128 to_u128(const mpz_class& v) {
  // v >= 0 and fits; callers check sizeinbase.
  u128 lo = mpz_getlimbn(v.get_mpz_t(), 0);
  u128 hi = mpz_size(v.get_mpz_t()) > 1 ? mpz_getlimbn(v.get_mpz_t(), 1) : 0;
  return lo | (hi << 64);
}

inline mpz_class from_u128(u128 v) {
  mpz_class r(static_cast<unsigned long>(v >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<u64>(v));
  return r;
}

inline mpz_class from_i128(i128 v) {
  if (v < 0) return -from_u128(static_cast<u128>(-v));
  return from_u128(static_cast<u128>(v));
}

std::string to_string(i128 v);

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace sqf::detail
