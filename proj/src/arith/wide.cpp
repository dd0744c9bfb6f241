#include "sqf/detail/wide.hpp"

#include <algorithm>
#include <cmath>

namespace sqf::detail {
namespace {

struct Mont64 {
  using T = u64;
  u64 n;
  u64 inv;  // n^-1 mod 2^64
  u64 one;
  u64 r2;

  explicit Mont64(u64 modulus) : n(modulus) {
    inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    one = static_cast<u64>((u128(1) << 64) % n);
    r2 = static_cast<u64>((u128(one) * one) % n);
  }
  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * inv;
    u64 hi = static_cast<u64>(t >> 64);
    u64 mh = static_cast<u64>((u128(m) * n) >> 64);
    return hi >= mh ? hi - mh : hi - mh + n;
  }
  u64 mul(u64 a, u64 b) const { return reduce(u128(a) * b); }
  u64 to(u64 a) const { return mul(a % n, r2); }
  u64 from(u64 a) const { return reduce(a); }
  u64 add(u64 a, u64 b) const { return a >= n - b ? a - (n - b) : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n - b); }
  static u64 gcd(u64 a, u64 b) { return gcd_u64(a, b); }
};

struct Wide {
  u128 hi, lo;
};

inline Wide mul_wide(u128 a, u128 b) {
  u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
  u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
  u128 p00 = u128(a0) * b0;
  u128 p01 = u128(a0) * b1;
  u128 p10 = u128(a1) * b0;
  u128 p11 = u128(a1) * b1;
  u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
  Wide w;
  w.lo = static_cast<u64>(p00) | (mid << 64);
  w.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return w;
}

inline u128 mul_hi(u128 a, u128 b) { return mul_wide(a, b).hi; }

struct Mont128 {
  using T = u128;
  u128 n;
  u128 inv;
  u128 one;
  u128 r2;

  explicit Mont128(u128 modulus) : n(modulus) {
    inv = n;
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    one = (kU128Max % n + 1) % n;
    r2 = one;
    for (int i = 0; i < 128; ++i) r2 = add(r2, r2);
  }
  u128 reduce(Wide t) const {
    u128 m = t.lo * inv;
    u128 mh = mul_hi(m, n);
    return t.hi >= mh ? t.hi - mh : t.hi - mh + n;
  }
  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }
  u128 to(u128 a) const { return mul(a % n, r2); }
  u128 from(u128 a) const { return reduce(Wide{0, a}); }
  u128 add(u128 a, u128 b) const { return a >= n - b ? a - (n - b) : a + b; }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n - b); }
  static u128 gcd(u128 a, u128 b) { return gcd_u128(a, b); }
};

template <class M>
bool strong_probable_prime(const M& mont, typename M::T n, typename M::T base) {
  using T = typename M::T;
  if (base % n == 0) return true;
  T d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  T x = mont.one;
  T b = mont.to(base);
  T e = d;
  while (e) {
    if (e & 1) x = mont.mul(x, b);
    b = mont.mul(b, b);
    e >>= 1;
  }
  T minus_one = mont.sub(0, mont.one);
  if (x == mont.one || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == mont.one) return false;
  }
  return false;
}

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

template <class M>
typename M::T brent(typename M::T n) {
  using T = typename M::T;
  M mont(n);
  constexpr int kBatch = 128;
  for (u64 c = 1;; ++c) {
    T cm = mont.to(static_cast<T>(c));
    auto step = [&](T v) { return mont.add(mont.mul(v, v), cm); };
    T y = mont.to(2), x = y, ys = y, q = mont.one, g = 1;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        u64 lim = std::min<u64>(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = M::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = M::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  Mont64 mont(n);
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (!strong_probable_prime(mont, n, a)) return false;
  }
  return true;
}

bool is_prime_u128(u128 n) {
  if ((n >> 64) == 0) return is_prime_u64(static_cast<u64>(n));
  for (unsigned p : kSmallPrimes) {
    if (n % p == 0) return false;
  }
  // The first 13 prime bases are a deterministic witness set below
  // 3317044064679887385961981.
  const u128 psi13 = (u128(179817ull) << 64) | u128(5885577656943027709ull);
  if (n < psi13) {
    Mont128 mont(n);
    for (unsigned p : kSmallPrimes) {
      if (!strong_probable_prime(mont, n, u128(p))) return false;
    }
    return true;
  }
  // Baillie-PSW (GMP >= 6.2) plus extra Miller-Rabin rounds.
  mpz_class z = from_u128(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

u64 brent_factor_u64(u64 n) { return brent<Mont64>(n); }
u128 brent_factor_u128(u128 n) {
  if ((n >> 64) == 0) return brent<Mont64>(static_cast<u64>(n));
  return brent<Mont128>(n);
}

u64 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (u128(r) * r > n) --r;
  while (r != ~u64(0) && u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_u128(u128 n, u64* root) {
  // Quick rejection by residues mod 64.
  if (((0x202021202030213ull >> (static_cast<unsigned>(n) & 63)) & 1) == 0) return false;
  u64 r = isqrt_u128(n);
  if (u128(r) * r != n) return false;
  if (root) *root = r;
  return true;
}

void factor_u128(u128 n, std::vector<u128>& out) {
  while (n > 1 && (n & 1) == 0) {
    out.push_back(2);
    n >>= 1;
  }
  if (n == 1) return;
  if (is_prime_u128(n)) {
    out.push_back(n);
    return;
  }
  u64 root = 0;
  if (is_square_u128(n, &root)) {
    std::vector<u128> half;
    factor_u128(root, half);
    for (u128 p : half) {
      out.push_back(p);
      out.push_back(p);
    }
    return;
  }
  u128 d = brent_factor_u128(n);
  factor_u128(d, out);
  factor_u128(n / d, out);
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace sqf::detail
